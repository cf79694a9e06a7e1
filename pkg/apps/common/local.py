#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : local
# author : ly_13
# date : 10/18/2024


from asgiref.local import Local

# the current run id lives here so log records can be stamped without passing it around
thread_local = Local(thread_critical=True)
