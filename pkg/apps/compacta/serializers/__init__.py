from .problem import ParamsSerializer, ProblemSpecSerializer, build_compact  # noqa
