#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : magic
# author : ly_13
# date : 6/2/2023

import threading
from functools import wraps


class MagicCacheData(object):
    @staticmethod
    def make_cache(key_func=None):
        """
        Memoize a method on its instance.

        :param key_func: builds the cache key from the call arguments, defaults to the positional arguments
        :return:

        Entries never expire: the decorated methods are pure, an instance answers the same
        question the same way for its whole life. The per-instance lock is reentrant because
        oracles may query themselves at other precisions while computing.
        """

        def decorator(func):
            attr = f"_magic_cache_{func.__name__}"

            @wraps(func)
            def wrapper(self, *args, **kwargs):
                cache_key = key_func(*args, **kwargs) if key_func else args
                store = self.__dict__.get(attr)
                if store is None:
                    # setdefault keeps the first store if two threads race here
                    store = self.__dict__.setdefault(attr, ({}, threading.RLock()))
                data, locker = store
                try:
                    return data[cache_key]
                except KeyError:
                    pass
                with locker:
                    if cache_key not in data:
                        data[cache_key] = func(self, *args, **kwargs)
                    return data[cache_key]

            return wrapper

        return decorator
