from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class CommonConfig(AppConfig):
    """Logger factory, run context, memo cache and the command error handler."""

    name = "apps.common"
    verbose_name = _("Common")
