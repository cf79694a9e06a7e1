from .spaces import *  # noqa
