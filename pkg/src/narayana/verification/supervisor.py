"""Verification Supervisor: runs the counting oracles through a LangGraph workflow."""

import asyncio
import logging
import time
from collections.abc import Awaitable, Callable, Mapping
from typing import TypedDict

from langgraph.graph import END, StateGraph

from narayana.combinatorics.counting import (
    CountTable,
    domain_cells,
    gen_narayana,
    lgv_count,
    tabulate,
)
from narayana.combinatorics.dyck import census_upto
from narayana.combinatorics.series import gf_expand
from narayana.errors import NarayanaError
from narayana.models import CellCheck, Oracle, VerificationReport, VerifyRequest

logger = logging.getLogger(__name__)

OracleFn = Callable[[VerifyRequest], CountTable]


def census_table(nmax: int, bound: int | None = None) -> CountTable:
    return census_upto(nmax, bound)


def closed_table(nmax: int) -> CountTable:
    return tabulate(gen_narayana, nmax)


def lgv_table(nmax: int) -> CountTable:
    return tabulate(lgv_count, nmax)


def gf_table(nmax: int, bound: int | None = None) -> CountTable:
    """Coefficients with n >= 1; CountTable rejects terms outside 1 <= i <= j <= n."""
    expansion = gf_expand(nmax, bound)
    return CountTable(
        {(i, n, j): int(c) for (n, i, j), c in expansion.coefficients.items() if n >= 1}
    )


DEFAULT_ORACLES: dict[Oracle, OracleFn] = {
    Oracle.CENSUS: lambda request: census_table(request.nmax, request.enumeration_bound),
    Oracle.CLOSED: lambda request: closed_table(request.nmax),
    Oracle.LGV: lambda request: lgv_table(request.nmax),
    Oracle.GF: lambda request: gf_table(request.nmax, request.gf_bound),
}


class VerificationState(TypedDict):
    """State managed by the Verification Supervisor."""

    request: VerifyRequest
    tables: dict[str, CountTable]
    oracle_errors: dict[str, str]
    cells: list[CellCheck]
    report: VerificationReport | None


class VerificationSupervisor:
    """
    Verification Supervisor.

    Runs each requested oracle in turn, compares every cell, and produces a
    machine-readable report. Oracle implementations can be replaced, which is
    how tests check that a corrupted oracle is caught.
    """

    def __init__(self, oracles: Mapping[Oracle, OracleFn] | None = None):
        """Initialize with the default oracles, overridden by `oracles`."""
        self.oracles: dict[Oracle, OracleFn] = {**DEFAULT_ORACLES, **(oracles or {})}
        self.graph = self._build_graph()

    def _build_graph(self) -> StateGraph:
        """Build LangGraph workflow."""
        workflow = StateGraph(VerificationState)

        chain = [f"run_{oracle.value}" for oracle in Oracle] + ["compare", "build_report"]
        for oracle in Oracle:
            workflow.add_node(f"run_{oracle.value}", self._oracle_node(oracle))
        workflow.add_node("compare", self._compare)
        workflow.add_node("build_report", self._build_report)

        workflow.set_entry_point(chain[0])
        for source, target in zip(chain, chain[1:]):
            workflow.add_edge(source, target)
        workflow.add_edge(chain[-1], END)

        return workflow.compile()

    async def verify(self, request: VerifyRequest) -> VerificationReport:
        """
        Cross-check the requested oracles on every cell up to request.nmax.

        Args:
            request: Verification request

        Returns:
            VerificationReport; `ok` is false iff some cell disagrees. Oracle
            failures are listed in `oracle_errors` and do not affect `ok`
        """
        initial_state: VerificationState = {
            "request": request,
            "tables": {},
            "oracle_errors": {},
            "cells": [],
            "report": None,
        }

        final_state = await self.graph.ainvoke(initial_state)

        if not final_state.get("report"):
            raise RuntimeError("Supervisor did not produce a report")

        return final_state["report"]

    def _oracle_node(
        self, oracle: Oracle
    ) -> Callable[[VerificationState], Awaitable[VerificationState]]:
        async def run(state: VerificationState) -> VerificationState:
            request = state["request"]
            if oracle not in request.oracles:
                return state
            started = time.perf_counter()
            try:
                table = await asyncio.to_thread(self.oracles[oracle], request)
            except NarayanaError as exc:
                logger.warning("Oracle %s failed: %s", oracle.value, exc)
                state["oracle_errors"] = {**state["oracle_errors"], oracle.value: str(exc)}
                return state
            logger.info(
                "Oracle %s: %d nonzero cells in %.3fs",
                oracle.value,
                len(table),
                time.perf_counter() - started,
            )
            state["tables"] = {**state["tables"], oracle.value: table}
            return state

        return run

    async def _compare(self, state: VerificationState) -> VerificationState:
        """Compare all participating oracles cell by cell; absent means zero."""
        tables = state["tables"]
        keys = set(domain_cells(state["request"].nmax))
        for table in tables.values():
            keys.update(table.cells())

        cells: list[CellCheck] = []
        for i, n, j in sorted(keys, key=lambda cell: (cell[1], cell[0], cell[2])):
            values = {name: table.get(i, n, j) for name, table in tables.items()}
            agree = len(set(values.values())) <= 1
            if not agree:
                logger.warning("Mismatch at (i=%d, n=%d, j=%d): %s", i, n, j, values)
            cells.append(CellCheck(i=i, n=n, j=j, values=values, agree=agree))

        state["cells"] = cells
        return state

    async def _build_report(self, state: VerificationState) -> VerificationState:
        """Build final verification report."""
        request = state["request"]
        cells = state["cells"]
        mismatches = sum(not cell.agree for cell in cells)

        state["report"] = VerificationReport(
            nmax=request.nmax,
            oracles=request.oracles,
            oracle_errors=state["oracle_errors"],
            cells=cells,
            mismatches=mismatches,
            ok=mismatches == 0,
        )
        return state
