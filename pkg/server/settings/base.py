"""
Django settings for the compacta project.

Only the parts of django the command line needs are configured: the app
registry, translations and the management command machinery. There is no
database, no cache and no URL routing.
"""

import os

from ..const import CONFIG, PROJECT_DIR

BASE_DIR = PROJECT_DIR

SECRET_KEY = CONFIG.SECRET_KEY

DEBUG = CONFIG.DEBUG
DEBUG_DEV = CONFIG.DEBUG_DEV

LOG_LEVEL = CONFIG.LOG_LEVEL

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    "rest_framework",
    "apps.compacta.apps.CompactaConfig",
    "apps.common.apps.CommonConfig",
]

# only serializers and exceptions of rest_framework are used, without django.contrib.auth
REST_FRAMEWORK = {
    "DEFAULT_AUTHENTICATION_CLASSES": [],
    "DEFAULT_PERMISSION_CLASSES": [],
    "UNAUTHENTICATED_USER": None,
}

MIDDLEWARE = []

DATABASES = {}

LANGUAGE_CODE = CONFIG.LANGUAGE_CODE

TIME_ZONE = CONFIG.TIME_ZONE

USE_I18N = True

USE_TZ = True

DATA_DIR = os.path.join(PROJECT_DIR, "data")

LOCALE_PATHS = [
    os.path.join(PROJECT_DIR, "locale"),
]

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

TEST_RUNNER = "django.test.runner.DiscoverRunner"
