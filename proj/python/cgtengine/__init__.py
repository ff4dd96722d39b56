try:
    from ._cgtengine import *  # noqa: F401,F403
    from ._cgtengine import __doc__  # noqa: F401
except ImportError:  # in-tree builds put the extension next to the package
    from _cgtengine import *  # noqa: F401,F403
    from _cgtengine import __doc__  # noqa: F401
