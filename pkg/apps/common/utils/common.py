#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : common
# author : ly_13
# date : 9/14/2024

import logging
import os

__all__ = ["get_logger"]


def get_logger(name="") -> logging.Logger:
    if "/" in name:
        name = os.path.basename(name).replace(".py", "")
    if name.startswith("apps."):
        name = name.split(".", 2)[-1]
    return logging.getLogger(f"compacta.{name}")
