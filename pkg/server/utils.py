#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : utils
# author : ly_13
# date : 10/18/2024

from apps.common.local import thread_local


def set_current_run(run_id):
    setattr(thread_local, "current_run", run_id)


def clear_current_run():
    setattr(thread_local, "current_run", None)


def _find(attr):
    return getattr(thread_local, attr, None)


def get_current_run():
    return _find("current_run")
