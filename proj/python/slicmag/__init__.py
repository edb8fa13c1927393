"""Superpixel-guided image enlargement."""

try:
    from ._slicmag import (  # noqa: F401
        IoError,
        enlarge,
        enlarge_baseline,
        load,
        psnr,
        resize,
        save,
        segment,
    )
except ImportError:  # extension built out-of-tree (plain CMake dev builds)
    from _slicmag import (  # noqa: F401
        IoError,
        enlarge,
        enlarge_baseline,
        load,
        psnr,
        resize,
        save,
        segment,
    )

__all__ = [
    "IoError",
    "enlarge",
    "enlarge_baseline",
    "load",
    "psnr",
    "resize",
    "save",
    "segment",
]
