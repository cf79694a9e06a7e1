from .base import *  # noqa
from .images import *  # noqa
from .search import *  # noqa
