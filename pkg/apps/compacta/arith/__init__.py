from .creal import *  # noqa
from .rational import *  # noqa
