"""Sphinx extension for the fan-tilde documentation"""

from __future__ import annotations

from fan_tilde.sphinx_ext import family_claims_directive

TYPE_CHECKING = False
if TYPE_CHECKING:
    from sphinx.application import Sphinx


def setup(app: Sphinx) -> dict[str, bool]:
    """Initialize Sphinx extension."""

    app.add_directive("family-claims", family_claims_directive.FamilyClaims)

    # Parallel safety: https://www.sphinx-doc.org/en/master/extdev/index.html#extension-metadata
    return {"parallel_read_safe": True, "parallel_write_safe": True}
