"""Helper classes and functions used among the code."""
import time
import datetime
import unittest
from collections import defaultdict
from io import StringIO
from unittest.mock import patch
from typing import Any, Callable, List

import numpy as np

from .base.exactmath import RatPoly


__all__ = ["Timer", "TestHelper", "split_list", "split_range",
           "print_banner_line", "get_datetime"]


class Timer:
    """
    Class for measuring the time usage of sweeps and verification runs.

    Attributes
    ----------
    _start_time: Dict[str, float]
        time of last tic call
    _time_usage: Dict[str, float]
        time usage of the last finished tic/toc pair
    _total_time_usage: Dict[str, float]
        accumulated time usage
    """
    def __init__(self) -> None:
        self._start_time = {}
        self._time_usage = {}
        self._total_time_usage = defaultdict(float)

    def tic(self, slot: str) -> None:
        """
        Begin tracking time usage for given slot.

        :param slot: name of the slot
        :return: None
        """
        self._start_time[slot] = time.perf_counter()

    def toc(self, slot: str) -> float:
        """
        Stop tracking time usage for given slot.

        :param slot: name of the slot
        :return: time usage since the last tic
        :raises RuntimeError: if tracking for slot has not started
        """
        try:
            start = self._start_time.pop(slot)
        except KeyError as err:
            raise RuntimeError(f"Record for slot '{slot}' not started") \
                from err
        usage = time.perf_counter() - start
        self._time_usage[slot] = usage
        self._total_time_usage[slot] += usage
        return usage

    def _report(self, usage: dict) -> None:
        if self._start_time:
            slot = next(iter(self._start_time))
            raise RuntimeError(f"Record for slot '{slot}' not ended")
        if usage:
            max_len = max(len(_) for _ in usage.keys())
            for slot, value in usage.items():
                print("\t", f"{slot:<{max_len}} : {value:10.5f}")

    def report_time(self) -> None:
        """
        Report time usage of the last tic/toc pairs.

        :return: None
        :raises RuntimeError: if tracking for any slot has not ended
        """
        self._report(self._time_usage)

    def report_total_time(self) -> None:
        """
        Report accumulated time usage.

        :return: None
        :raises RuntimeError: if tracking for any slot has not ended
        """
        self._report(self._total_time_usage)


class TestHelper:
    """
    Helper class that makes unittest easier.

    Attributes
    ----------
    _tester: 'unittest.TestCase' instance
        testcase upon which tests are performed
    """
    def __init__(self, tester: unittest.TestCase) -> None:
        """
        :param tester: testcase upon which tests are performed
        """
        self._tester = tester

    def test_equal_poly(self, poly1: RatPoly, poly2: Any) -> None:
        """
        Checks if two polynomials are exactly equal.

        :param poly1: 1st polynomial
        :param poly2: 2nd polynomial, or a list of ascending coefficients
        :return: None
        """
        if not isinstance(poly2, RatPoly):
            poly2 = RatPoly(poly2)
        self._tester.assertEqual(poly1, poly2,
                                 msg=f"{poly1} != {poly2}")

    def test_raise(self, func: Callable, exception: Any,
                   message: str = None) -> None:
        """
        Tests if expected exception is raised during an operation.

        :param func: wrapper function over the operation to test
        :param exception: category of exception to test
        :param message: regex the exception message should match
        :return: None
        """
        with self._tester.assertRaises(exception) as cm:
            func()
        if message is not None:
            self._tester.assertRegex(str(cm.exception), message)

    def test_stdout(self, func: Callable, message: List[str]) -> None:
        """
        Test if the output contain given message.

        :param func: wrapper function over the operation to test
        :param message: reference message with which to compare, each regex
            corresponds to one line of output
        :return: None
        """
        with patch('sys.stdout', new=StringIO()) as fake_out:
            func()
        output = [out for out in fake_out.getvalue().split("\n") if out != ""]
        for i, msg in enumerate(message):
            self._tester.assertRegex(output[i], msg)


def split_list(raw_list: List[Any], num_group: int) -> List[List[Any]]:
    """
    Split given list into num_group contiguous groups of balanced size.

    For example, [0, 1, 2, 3, 4] split into two groups gives
    [[0, 1, 2], [3, 4]]. Groups may be empty if the list is short.

    :param raw_list: incoming list to split
    :param num_group: number of groups
    :return: list of groups
    """
    return [[raw_list[i] for i in rng]
            for rng in split_range(len(raw_list), num_group)]


def split_range(n_max: int, num_group: int = 1) -> List[range]:
    """
    Split range(n_max) into num_group contiguous ranges.

    :param n_max: upperbound of range, starting from 0
    :param num_group: number of groups
    :return: list of ranges split from range(n_max)
    """
    num_item = [n_max // num_group + (1 if i < n_max % num_group else 0)
                for i in range(num_group)]
    bounds = np.cumsum([0] + num_item)
    return [range(int(bounds[i]), int(bounds[i+1])) for i in range(num_group)]


def print_banner_line(text: str,
                      width: int = 80,
                      mark: str = "-",
                      end: str = "#") -> None:
    """
    Print a banner like '#--------------- FOO ---------------#' to stdout.

    :param text: central text in the banner
    :param width: total width of the banner
    :param mark: border character of the banner
    :param end: end character prepended and appended to the banner
    :return: None
    """
    num_marks = width - len(text) - 4
    left = num_marks // 2
    print(f"{end}{mark * left} {text} {mark * (num_marks - left)}{end}")


def get_datetime(fmt: str = "%x %X") -> str:
    """
    Return current date and time.

    :param fmt: date and time format
    :return: current date and time
    """
    return datetime.datetime.now().strftime(fmt)
