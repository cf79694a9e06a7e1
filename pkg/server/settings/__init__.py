from .base import *
from .custom import *
from .logging import *
