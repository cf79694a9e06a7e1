from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class CompactaConfig(AppConfig):
    """
    Compacts of complete metric spaces and moduli of continuity
    """

    name = "apps.compacta"
    verbose_name = _("Compacta")
