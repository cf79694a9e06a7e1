#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
"""
Settings source for the compacta project.

A key is looked up in the config file first (config.yml, config.yaml or config.py in the
project root), then in the environment, then in the defaults below. Environment values are
text and are converted to the type of the default.
"""

import errno
import logging
import os
import runpy

import yaml

PROJECT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

logger = logging.getLogger("compacta.conf")


class Config(dict):
    base = {
        # only used by django internals, the CLI never signs anything
        "SECRET_KEY": "compacta-development-key-not-for-deployment",
        "DEBUG": False,
        "DEBUG_DEV": False,
        "LOG_LEVEL": "WARNING",
        "LOG_TO_FILE": False,
        "LANGUAGE_CODE": "en-us",
        "TIME_ZONE": "UTC",
    }
    compacta = {
        # every unbounded search stops after this many rounds
        "COMPACTA_SEARCH_BUDGET": 64,
        # binary digits used when rendering CReals in reports
        "COMPACTA_OUTPUT_PRECISION": 20,
        "COMPACTA_SOUNDNESS_SAMPLES": 1000,
        "COMPACTA_SEED": 0,
        "COMPACTA_METRIC_CACHE_SIZE": 65536,
        "COMPACTA_IMAGE_CACHE_SIZE": 4096,
        "COMPACTA_VALUE_CACHE_SIZE": 65536,
    }

    defaults = {**base, **compacta}

    def convert_type(self, k, v):
        default_value = self.defaults.get(k)
        if default_value is None or not isinstance(v, str):
            return v
        if isinstance(default_value, bool):
            return v.strip().lower() in ("true", "1", "yes", "on")
        try:
            return type(default_value)(v)
        except ValueError:
            logger.warning("Ignoring %s=%r, expected %s", k, v, type(default_value).__name__)
            return default_value

    def __repr__(self):
        return "<%s %s>" % (self.__class__.__name__, dict.__repr__(self))

    def get(self, item, default=None):
        value = super().get(item)
        if value is None:
            value = os.environ.get(item)
            if value is not None:
                value = self.convert_type(item, value)
        if value is None:
            value = self.defaults.get(item) if default is None else default
        return value

    def __getitem__(self, item):
        return self.get(item)

    def __getattr__(self, item):
        return self.get(item)


class ConfigManager:
    config_class = Config

    def __init__(self, root_path=None):
        self.root_path = root_path
        self.config = self.config_class()

    def _path(self, filename):
        return os.path.join(self.root_path, filename) if self.root_path else filename

    def from_pyfile(self, filename="config.py"):
        try:
            namespace = runpy.run_path(self._path(filename))
        except OSError as e:
            if e.errno in (errno.ENOENT, errno.EISDIR):
                return False
            raise
        return self.from_mapping(namespace)

    def from_yaml(self, filename):
        with open(self._path(filename), "rt", encoding="utf8") as f:
            obj = yaml.safe_load(f)
        if obj:
            return self.from_mapping(obj)
        return True

    def from_mapping(self, mapping=None, **kwargs):
        for items in ((mapping or {}).items(), kwargs.items()):
            for key, value in items:
                if isinstance(key, str) and key.isupper():
                    self.config[key] = value
        return True

    def load_from_yml(self):
        for filename in ("config.yml", "config.yaml"):
            if os.path.isfile(self._path(filename)):
                return self.from_yaml(filename)
        return False

    @classmethod
    def load_user_config(cls, root_path=None, config_class=None):
        manager = cls(root_path=root_path or PROJECT_DIR)
        if config_class is not None:
            manager.config = config_class()
        if manager.load_from_yml() or manager.from_pyfile():
            return manager.config
        # the library has to work from a fresh checkout, env and defaults cover everything
        logger.warning("No config file found in %s, using environment and defaults", manager.root_path)
        return manager.config
