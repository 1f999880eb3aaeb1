"""
Basic test suite for stripcomb.
"""

from importlib import metadata

import stripcomb


def test_version():
    """
    Verify that the package version is properly set and accessible.
    The installed metadata and the module attribute must agree.
    """
    version = metadata.version("stripcomb")
    assert version == "0.3.0"
    assert stripcomb.__version__ == version
