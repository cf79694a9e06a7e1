#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : custom
# author : ly_13
# date : 11/14/2024

from ..const import CONFIG

# defaults of the command line flags, library calls always take explicit values
COMPACTA_SEARCH_BUDGET = CONFIG.COMPACTA_SEARCH_BUDGET
COMPACTA_OUTPUT_PRECISION = CONFIG.COMPACTA_OUTPUT_PRECISION
COMPACTA_SOUNDNESS_SAMPLES = CONFIG.COMPACTA_SOUNDNESS_SAMPLES
COMPACTA_SEED = CONFIG.COMPACTA_SEED

# lru sizes of the per-space distance cache, the per-oracle image cache and the per-map value cache
COMPACTA_METRIC_CACHE_SIZE = CONFIG.COMPACTA_METRIC_CACHE_SIZE
COMPACTA_IMAGE_CACHE_SIZE = CONFIG.COMPACTA_IMAGE_CACHE_SIZE
COMPACTA_VALUE_CACHE_SIZE = CONFIG.COMPACTA_VALUE_CACHE_SIZE
