#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : logging
# author : ly_13
# date : 10/18/2024
import logging
import os
import sys
from datetime import datetime, timedelta
from logging.handlers import TimedRotatingFileHandler

from server.utils import get_current_run


class DailyTimedRotatingFileHandler(TimedRotatingFileHandler):
    """Rotates into data/logs/<yesterday>/<name>."""

    def rotator(self, source, dest):
        dest = self._get_rotate_dest_filename(source)
        # several CLI processes may share one log, only the first one renames
        if os.path.exists(source) and not os.path.exists(dest):
            os.rename(source, dest)

    @staticmethod
    def _get_rotate_dest_filename(source):
        day = (datetime.now() - timedelta(days=1)).strftime("%Y-%m-%d")
        folder = os.path.join(os.path.dirname(source), day)
        os.makedirs(folder, exist_ok=True)
        return os.path.join(folder, os.path.basename(source))


class ServerFormatter(logging.Formatter):
    """Stamps every record with the problem run it belongs to."""

    def format(self, record):
        record.runId = str(get_current_run() or "SYSTEM")[:16]
        return super().format(record)


class ColorHandler(logging.StreamHandler):
    """stderr handler, ANSI colours by level when the stream is a terminal."""

    colors = {
        logging.DEBUG: "34",
        logging.INFO: "32",
        logging.WARNING: "33",
        logging.ERROR: "31",
        logging.CRITICAL: "35",
    }

    def __init__(self, stream=None):
        super().__init__(stream or sys.stderr)

    def format(self, record):
        msg = super().format(record)
        if getattr(self.stream, "isatty", lambda: False)():
            return f"\x1b[{self.colors.get(record.levelno, '0')}m{msg}\x1b[0m"
        return msg
