from .settings import settings
from .verdict import CheckVerdict
from . import errors, syntax, semantics, calculus, sdl, corpus
