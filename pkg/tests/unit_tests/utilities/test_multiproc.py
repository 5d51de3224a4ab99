#!/bin/env python
# -*- coding: utf-8 -*-
"""
Created on 22.10.24

Created for powertriad

    Copyright (C) {2024}  {powertriad developers}

    This program is free software: you can redistribute it and/or modify
    it under the terms of the GNU General Public License as published by
    the Free Software Foundation, either version 3 of the License, or
    (at your option) any later version.

    This program is distributed in the hope that it will be useful,
    but WITHOUT ANY WARRANTY; without even the implied warranty of
    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
    GNU General Public License for more details.

    You should have received a copy of the GNU General Public License
    along with this program.  If not, see <http://www.gnu.org/licenses/>.
"""
# System modules
import unittest
import logging

# External modules

# Internal modules
from powertriad.utilities.multiproc_util import MultiThread


logging.basicConfig(level=logging.DEBUG)


def square(value):
    return value ** 2


class TestMultiThread(unittest.TestCase):
    def test_sequential(self):
        mt = MultiThread(processes=1)
        self.assertEqual(mt.map, mt._sequential_map)
        self.assertListEqual(mt.map(square, range(5)), [0, 1, 4, 9, 16])

    def test_threads_keep_order(self):
        mt = MultiThread(processes=3)
        self.assertEqual(mt.map, mt._multiprocess_map)
        self.assertListEqual(mt.map(square, range(50)),
                             [v ** 2 for v in range(50)])

    def test_processes_keep_order(self):
        mt = MultiThread(processes=2, threads=False)
        self.assertListEqual(mt.map(square, range(10)),
                             [v ** 2 for v in range(10)])

    def test_empty_iterable(self):
        self.assertListEqual(MultiThread(processes=2).map(square, []), [])

    def test_processes_setter_switches_map(self):
        mt = MultiThread(processes=2)
        mt.processes = 1
        self.assertEqual(mt.map, mt._sequential_map)

    def test_wrong_processes_raise(self):
        with self.assertRaises(TypeError):
            MultiThread(processes=2.)
        with self.assertRaises(TypeError):
            MultiThread(processes=True)
        with self.assertRaises(ValueError):
            MultiThread(processes=0)


if __name__ == '__main__':
    unittest.main()
