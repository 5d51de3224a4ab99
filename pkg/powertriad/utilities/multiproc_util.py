#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 04.03.24
#
#Created for powertriad
#
#    Copyright (C) {2024}  {powertriad developers}
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program.  If not, see <http://www.gnu.org/licenses/>.
#

# System modules
import logging
import multiprocessing
import multiprocessing.dummy

# External modules
from tqdm import tqdm

# Internal modules


logger = logging.getLogger(__name__)


class MultiThread(object):
    """
    Map a function with a single argument over an iterable, either
    sequentially or with a pool of threads/processes. The order of the
    returned values is always the order of the iterable, such that windowed
    power summaries keep their time order.

    Parameters
    ----------
    processes : int
        The number of workers. If this is one, the mapping is sequential.
    threads : bool, optional
        If a thread pool should be used instead of a process pool. Threads
        are sufficient for the numpy based kernels, because numpy releases the
        GIL. Default is True.
    progress : bool, optional
        If a tqdm progress bar should be shown. Default is False.
    """
    def __init__(self, processes=1, threads=True, progress=False):
        self._processes = None
        self.map = None
        self.threads = threads
        self.progress = progress
        self.processes = processes

    @property
    def processes(self):
        return self._processes

    @processes.setter
    def processes(self, nr_proc):
        if not isinstance(nr_proc, int) or isinstance(nr_proc, bool):
            raise TypeError('The number of processes needs to be an integer!')
        if nr_proc < 1:
            raise ValueError('The number of processes needs to be positive!')
        self._processes = nr_proc
        if self._processes > 1:
            self.map = self._multiprocess_map
        else:
            self.map = self._sequential_map

    def _sequential_map(self, single_func, iter_obj):
        """
        Map the iterable sequentially to the given function.

        Parameters
        ----------
        single_func : python function
            Function with a single parameter. For functions with more than one
            parameter it's recommended to use functools.partial.
        iter_obj : iterable
            The entries of this object are mapped to the function.

        Returns
        -------
        returned_data : list(obj)
            The returned values in the order of iter_obj.
        """
        returned_data = []
        for d in tqdm(iter_obj, disable=not self.progress):
            returned_data.append(single_func(d))
        return returned_data

    def _multiprocess_map(self, single_func, iter_obj):
        """
        Map the iterable with a pool of workers to the given function. The
        results are collected with imap, so the order is retained.

        Parameters
        ----------
        single_func : python function
            Function with a single parameter. For functions with more than one
            parameter it's recommended to use functools.partial.
        iter_obj : iterable
            The entries of this object are mapped to the function.

        Returns
        -------
        returned_data : list(obj)
            The returned values in the order of iter_obj.
        """
        iter_obj = list(iter_obj)
        if self.threads:
            pool = multiprocessing.dummy.Pool(processes=self.processes)
        else:
            pool = multiprocessing.Pool(processes=self.processes)

        # From the multiprocessing _map_async code.
        chunksize, extra = divmod(len(iter_obj), self.processes * 4)
        if extra:
            chunksize += 1
        chunksize = max(chunksize, 1)

        returned_data = []
        try:
            with tqdm(total=len(iter_obj), disable=not self.progress) as pbar:
                for d_ind in pool.imap(single_func, iter_obj,
                                       chunksize=chunksize):
                    returned_data.append(d_ind)
                    pbar.update()
        finally:
            pool.close()
            pool.join()
        return returned_data
