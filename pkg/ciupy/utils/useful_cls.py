#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import time
import types
from collections import defaultdict
from datetime import timedelta
from functools import wraps
from typing import Dict

__all__ = ['TimedMetaClass', 'Timer']


class Timer(object):
    """
    Accumulating wall-clock timers, one per name.

    ::

        >>> timer = Timer()
        >>> with timer:
        ...     heavy_work()
        >>> timer.elapsed
    """

    class _Timer:
        def __init__(self):
            self.start = None
            self.times = []

        @property
        def elapsed(self):
            dt = 0.0
            if self.start is not None:
                dt = time.perf_counter() - self.start
            return sum(self.times) + dt

        @property
        def count(self):
            return len(self.times)

    def __init__(self, time_func=time.perf_counter):
        self._func = time_func
        self._timers = defaultdict(self._Timer)

    def start(self, fn_name='main'):
        timer = self._timers[fn_name]
        if timer.start is not None:
            raise RuntimeError('Timer <%s> Already started' % fn_name)
        timer.start = self._func()

    def stop(self, fn_name='main'):
        timer = self._timers[fn_name]
        if timer.start is None:
            raise RuntimeError('Timer <%s> not started' % fn_name)
        timer.times.append(self._func() - timer.start)
        timer.start = None

    @property
    def elapsed(self) -> float:
        if 'main' in self._timers:
            return self._timers['main'].elapsed
        return sum(v.elapsed for v in self._timers.values())

    def summary(self) -> Dict[str, float]:
        """Elapsed seconds per timer name, slowest first."""
        tmp = {k: v.elapsed for k, v in self._timers.items()}
        return dict(sorted(tmp.items(), key=lambda t: t[1], reverse=True))

    def __repr__(self):
        return f'Total elapsed: {timedelta(seconds=self.elapsed)} <seconds>\n' + \
               '\n'.join([f'  |- {k}: {timedelta(seconds=v)} ({self._timers[k].count} calls)'
                          for k, v in self.summary().items()])

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, *args):
        self.stop()


class TimedMetaClass(type):
    """
    Metaclass that wraps every public method of its classes with a named timer.
    The timer is available as ``instance.timer``.
    """

    @staticmethod
    def _get_timer(obj) -> Timer:
        timer = obj.__dict__.get('_timer')
        if timer is None:
            timer = Timer()
            obj.__dict__['_timer'] = timer
        return timer

    @staticmethod
    def _timed(fn):
        @wraps(fn)
        def fn_(self, *args, **kwargs):
            timer = TimedMetaClass._get_timer(self)
            # re-entrant calls of the same method are timed by the outer call only
            if timer._timers[fn.__name__].start is not None:
                return fn(self, *args, **kwargs)
            timer.start(fn.__name__)
            try:
                return fn(self, *args, **kwargs)
            finally:
                timer.stop(fn.__name__)

        return fn_

    def __new__(mcs, name, bases, attrs):
        for name_, value_ in list(attrs.items()):
            if not name_.startswith('_') and isinstance(value_, types.FunctionType):
                attrs[name_] = TimedMetaClass._timed(value_)
        cls = super(TimedMetaClass, mcs).__new__(mcs, name, bases, attrs)
        cls.timer = property(TimedMetaClass._get_timer)
        return cls
