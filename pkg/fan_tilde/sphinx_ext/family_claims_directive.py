"""Directive that verifies an extremal family member while the docs build."""

from __future__ import annotations

from docutils import nodes
from docutils.parsers import rst

from fan_tilde.errors import FanTildeError
from fan_tilde.extremal_families.families import FamilySpec
from fan_tilde.extremal_families.families import verify_family_claims

HEADERS = ("Claim", "Expected", "Observed", "Result")


def _row(cells: list[str]) -> nodes.row:
    row = nodes.row()
    for text in cells:
        row += nodes.entry("", nodes.paragraph(text=text))
    return row


class FamilyClaims(rst.Directive):
    """Render the checked claims of ``.. family-claims:: g2 3`` as a table."""

    has_content = False
    required_arguments = 2
    optional_arguments = 0
    option_spec = {"caption": rst.directives.unchanged}

    def run(self) -> list[nodes.Node]:
        family, raw = self.arguments
        try:
            report = verify_family_claims(FamilySpec(family, int(raw)))
        except ValueError:
            raise self.error(f"family parameter must be an integer, got {raw!r}") from None
        except FanTildeError as exc:
            raise self.error(str(exc)) from None

        caption = self.options.get("caption", f"{report.spec} = {report.graph6}")
        table = nodes.table(classes=["family-claims"])
        table += nodes.title(text=caption)
        group = nodes.tgroup(cols=len(HEADERS))
        table += group
        group.extend(nodes.colspec(colwidth=1) for _ in HEADERS)
        group += nodes.thead("", _row(list(HEADERS)))
        body = nodes.tbody()
        for claim in report.claims:
            body += _row([claim.name, str(claim.expected), str(claim.observed), "pass" if claim.passed else "FAIL"])
        group += body
        if not report.holds:
            warning = self.state_machine.reporter.warning(
                f"{report.spec}: {len(report.failed)} claim(s) failed", line=self.lineno
            )
            return [table, warning]
        return [table]
