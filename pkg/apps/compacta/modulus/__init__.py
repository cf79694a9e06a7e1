from .certificate import ClassCertificate, initial_certificate  # noqa
from .peak import peak_modulus  # noqa
from .refine import refine_step  # noqa
from .trace import ModulusTrace  # noqa
from .uniform import *  # noqa
