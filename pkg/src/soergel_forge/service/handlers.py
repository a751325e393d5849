"""Handlers mapping request models to response models; both the HTTP
routes and the CLI dispatch here."""

from __future__ import annotations

from .. import SCHEMA, coxeter, exprgraph as eg, thick, verify
from ..bimodule import hom_dim_at_degree, predicted_hom_dim
from ..polynomials import dual_bases
from ..hecke import hom_rank_bs
from .models import (DualBasisRequest, DualBasisResponse, DualBasisRow,
                     GraphRequest, GraphResponse, HomdimRequest,
                     HomdimResponse, HomdimRow, MorphismDump,
                     RedwordsRequest, RedwordsResponse, VerifyRequest,
                     VerifyResponse, ZmatRequest)


def _target_element(n, J, word):
    if J is not None:
        return coxeter.longest(tuple(J), n)[0]
    return coxeter.evaluate(tuple(word), n)


def redwords(req: RedwordsRequest) -> RedwordsResponse:
    w = _target_element(req.n, req.J, req.word)
    words = coxeter.reduced_words(w)
    return RedwordsResponse(schema=SCHEMA, element=list(w),
                            count=len(words),
                            words=[list(x) for x in words])


def graph(req: GraphRequest) -> GraphResponse:
    w = _target_element(req.n, req.J, req.word)
    g = eg.build_expanded(w)
    census = eg.classify_cycles(g)
    obj = eg.conflate(g) if req.conflated else g
    if req.output_format == "dot":
        return GraphResponse(schema=SCHEMA, dot=obj.to_dot(),
                             cycle_census=census)
    return GraphResponse(schema=SCHEMA, graph=obj.to_json(),
                         cycle_census=census)


def zmat(req: ZmatRequest) -> MorphismDump:
    fam = thick.family(tuple(req.J), req.n)
    m = fam.z if req.which == "z" else fam.zbar
    dump = m.to_json()
    return MorphismDump(schema=SCHEMA, **dump)


def run_verify(req: VerifyRequest) -> VerifyResponse:
    try:
        report = verify.run_suite(req.suite, req.config)
    except verify.BudgetExceeded as exc:
        return VerifyResponse(schema=SCHEMA, suite=req.suite,
                              status="budget_exceeded", elapsed_seconds=0.0,
                              checks=[{"check": "budget", "parameters": {},
                                       "status": "fail",
                                       "witness": str(exc)}])
    return VerifyResponse(schema=SCHEMA, suite=report["suite"],
                          status=report["status"],
                          elapsed_seconds=report["elapsed_seconds"],
                          checks=report["checks"])


def homdim(req: HomdimRequest) -> HomdimResponse:
    x, y = tuple(req.x), tuple(req.y)
    rows = []
    agree = True
    for m in range(req.degree_lo, req.degree_hi + 1):
        solved = hom_dim_at_degree(x, y, m, req.n)
        predicted = int(predicted_hom_dim(x, y, m, req.n))
        rows.append(HomdimRow(degree=m, solved=solved, predicted=predicted))
        agree = agree and solved == predicted
    rank = hom_rank_bs(x, y, req.n)
    return HomdimResponse(schema=SCHEMA, x=list(x), y=list(y),
                          rank_polynomial=rank.to_json(), rows=rows,
                          agree=agree)


def dualbasis(req: DualBasisRequest) -> DualBasisResponse:
    pair = dual_bases(tuple(req.J), req.n)
    rows = [DualBasisRow(element=list(word), basis=g.text(), dual=gd.text())
            for word, g, gd in zip(pair.elements, pair.basis, pair.dual)]
    return DualBasisResponse(schema=SCHEMA, J=list(pair.parabolic), rows=rows)
