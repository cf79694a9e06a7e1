#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : exception
# author : ly_13
# date : 6/2/2023
import traceback
from logging import getLogger

from django.conf import settings
from django.utils.translation import gettext_lazy as _

from rest_framework.exceptions import ValidationError

from apps.compacta.exceptions import CompactaException, PreconditionViolation

logger = getLogger("compacta.exception")
unexpected_exception_logger = getLogger("unexpected_exception")


def error_pointer(detail, prefix=""):
    """JSON pointer and message of the first error in a DRF error detail."""
    if isinstance(detail, dict) and detail:
        key, value = next(iter(detail.items()))
        if key == "non_field_errors":
            return error_pointer(value, prefix)
        return error_pointer(value, f"{prefix}/{key}")
    if isinstance(detail, list) and detail:
        for index, item in enumerate(detail):
            if isinstance(item, (dict, list)):
                if item:
                    return error_pointer(item, f"{prefix}/{index}")
                continue
            return prefix, str(item)
    return prefix, str(detail)


def common_exception_handler(exc, context):
    """
    Error payload and process exit code for a failed command.

    Returns None for exceptions it does not know, after logging them; the caller re-raises.
    """
    if settings.DEBUG_DEV:
        logger.exception("Print traceback exception for Debug")
        traceback.print_exc()

    logger.error(f'{context.get("command", "compacta")} ERROR: {exc}')
    if isinstance(exc, ValidationError):
        pointer, message = error_pointer(exc.detail)
        payload = {"code": "invalid", "detail": message, "pointer": pointer}
        return payload, PreconditionViolation.exit_code

    if isinstance(exc, CompactaException):
        return exc.as_dict(), exc.exit_code

    if isinstance(exc, (ValueError, OSError)) and context.get("stage") == "parse":
        payload = {"code": "invalid", "detail": str(_("Unreadable problem file: {}").format(exc)), "pointer": ""}
        return payload, PreconditionViolation.exit_code

    unexpected_exception_logger.exception("")
    return None
