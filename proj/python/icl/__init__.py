try:
    from ._icl import *  # noqa: F401,F403  (installed package layout)
    from ._icl import bicyclic  # noqa: F401
except ImportError:
    from _icl import *  # noqa: F401,F403  (build-tree layout)
    from _icl import bicyclic  # noqa: F401
