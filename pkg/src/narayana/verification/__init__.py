"""Narayana-Paths verification: multi-oracle cross-checks and OEIS b-file comparison."""

from narayana.verification.oeis import check_bfile, linearize, parse_bfile, render_bfile
from narayana.verification.supervisor import VerificationSupervisor

__all__ = ["VerificationSupervisor", "check_bfile", "linearize", "parse_bfile", "render_bfile"]
