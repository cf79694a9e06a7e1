from .base import *  # noqa
from .extrema import sup_inf  # noqa
from .incidence import *  # noqa
from .split import *  # noqa
