"""edugraph - EduCOR knowledge-graph engine."""

from importlib.metadata import PackageNotFoundError, version as _pkg_version

try:
    __version__ = _pkg_version("edugraph")
except PackageNotFoundError:
    __version__ = "dev"
