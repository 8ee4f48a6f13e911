"""Command-line surface.

Inputs are JSON documents read from --input FILE (default stdin):

  form set   {"nvars": N, "forms": ["x0^2 + x1*x2", ...]}
  ideal      {"xvars": NX, "yvars": NY, "gens": ["x3*y2 - x1*y3", ...]}
  map pair   {"f": <form set>, "g": <form set>}

Outputs are printed as human-readable lines, or as a JSON document with
deterministically ordered fields under --json.  Exit codes: 0 success or
property holds, 1 property fails (also NotInverse / NotBirational), 2 input
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bigraded, groebner, identities, jonquieres, maps, samples
from .errors import (IdentityViolationError, NewtonDualError,
                     NonHomogeneousInputError, NotBirationalError,
                     NotInverseError)
from .groebner import Ideal, TermOrder
from .newton import FormSet, dual_set
from .parsing import parse_polynomial, render_polynomial
from .poly import Polynomial


class _InputError(Exception):
    pass


# -- JSON document helpers ---------------------------------------------------


def _load_doc(args):
    if args.input and args.input != "-":
        with open(args.input, "r", encoding="utf-8") as fh:
            return json.load(fh)
    return json.load(sys.stdin)


def _require(doc, key):
    if key not in doc:
        raise _InputError(f"missing field {key!r}")
    return doc[key]


def _form_from_text(text, nx, ny=0):
    p = parse_polynomial(text, nx, ny)
    if p.terms and not p.is_homogeneous:
        raise NonHomogeneousInputError(f"not a form: {text!r}")
    return p


def _formset_from_doc(doc):
    nvars = _require(doc, "nvars")
    forms = [_form_from_text(t, nvars) for t in _require(doc, "forms")]
    return FormSet(forms)


def _formset_doc(fs):
    return {"nvars": fs.nvars,
            "forms": [render_polynomial(f) for f in fs.forms]}


def _ideal_from_doc(doc):
    nx = _require(doc, "xvars")
    ny = doc.get("yvars", 0)
    gens = [parse_polynomial(t, nx, ny) for t in _require(doc, "gens")]
    return Ideal(gens, nx, ny)


def _ideal_doc(ideal):
    return {"xvars": ideal.nx, "yvars": ideal.ny,
            "gens": [render_polynomial(g, ideal.nx, ideal.ny)
                     for g in ideal.gens]}


def _emit(args, doc, lines):
    if args.json:
        print(json.dumps(doc))
    else:
        for line in lines:
            print(line)


# -- subcommand handlers -----------------------------------------------------


def _cmd_dual(args):
    fs = _formset_from_doc(_load_doc(args))
    out = dual_set(fs)
    _emit(args, _formset_doc(out), [render_polynomial(f) for f in out.forms])
    return 0


def _cmd_magnus(args):
    fs = identities.magnus(args.n)
    _emit(args, _formset_doc(fs), [render_polynomial(f) for f in fs.forms])
    return 0


def _cmd_reduce(args):
    doc = _load_doc(args)
    nvars = _require(doc, "nvars")
    forms = [_form_from_text(t, nvars) for t in _require(doc, "forms")]
    out = maps.reduce_representative(forms)
    _emit(args, _formset_doc(out.rep),
          [render_polynomial(f) for f in out.rep.forms])
    return 0


def _map_pair(args):
    doc = _load_doc(args)
    f = maps.reduce_representative(_formset_from_doc(_require(doc, "f")))
    g = maps.reduce_representative(_formset_from_doc(_require(doc, "g")))
    return f, g


def _cmd_compose(args):
    f, g = _map_pair(args)
    out = maps.compose(f, g)
    _emit(args, _formset_doc(out.rep),
          [render_polynomial(p) for p in out.rep.forms])
    return 0


def _cmd_samemap(args):
    f, g = _map_pair(args)
    same = maps.same_map(f, g)
    _emit(args, {"same": same}, [str(same).lower()])
    return 0 if same else 1


def _cmd_invfactor(args):
    f, g = _map_pair(args)
    factor = maps.inversion_factor(f, g)
    _emit(args, {"factor": render_polynomial(factor)},
          [render_polynomial(factor)])
    return 0


def _cmd_mono_inverse(args):
    fs = _formset_from_doc(_load_doc(args))
    inverse = maps.monomial_cremona_inverse(
        maps.reduce_representative(fs), degree_cap=args.cap)
    _emit(args, _formset_doc(inverse.rep),
          [render_polynomial(p) for p in inverse.rep.forms])
    return 0


def _cmd_magnus_commute(args):
    fs = _formset_from_doc(_load_doc(args))
    commutes = maps.magnus_commute(maps.reduce_representative(fs))
    _emit(args, {"commutes": commutes}, [str(commutes).lower()])
    return 0 if commutes else 1


def _cmd_kernel(args):
    fs = _formset_from_doc(_load_doc(args))
    out = maps.image_kernel(fs)
    _emit(args, _ideal_doc(out),
          [render_polynomial(g, out.nx, out.ny) for g in out.gens] or ["0"])
    return 0


def _cmd_rees(args):
    fs = _formset_from_doc(_load_doc(args))
    out = bigraded.rees_ideal(fs, deadline=args.gb_deadline)
    _emit(args, _ideal_doc(out),
          [render_polynomial(g, out.nx, out.ny) for g in out.gens])
    return 0


def _cmd_psi(args):
    doc = _load_doc(args)
    nx = _require(doc, "xvars")
    ny = _require(doc, "yvars")
    p = parse_polynomial(_require(doc, "p"), nx, ny)
    image = bigraded.psi_flat(p, nx, ny)
    text = render_polynomial(image, nx, ny)
    _emit(args, {"psi": text}, [text])
    return 0


def _cmd_mainrees(args):
    fs = _formset_from_doc(_load_doc(args))
    report = bigraded.main_rees_check(fs, deadline=args.gb_deadline)
    nx, ny = fs.nvars, len(fs)
    doc = {
        "dual": [render_polynomial(f) for f in report.dual.forms],
        "generators_used": [render_polynomial(g, nx, ny)
                            for g in report.generators_used],
        "psi_images": [render_polynomial(g, nx, ny) for g in report.psi_images],
        "images_in_dual_ideal": report.images_in_dual_ideal,
        "saturation_equal": report.saturation_equal,
        "witness": None if report.witness is None
        else render_polynomial(report.witness, nx, ny),
    }
    lines = [f"images_in_dual_ideal: {report.images_in_dual_ideal}",
             f"saturation_equal: {report.saturation_equal}",
             f"witness: {doc['witness']}"]
    _emit(args, doc, lines)
    return 0 if report.ok else 1


def _cmd_quotient(args):
    doc = _load_doc(args)
    ideal = _ideal_from_doc(_require(doc, "ideal"))
    f = parse_polynomial(_require(doc, "f"), ideal.nx, ideal.ny)
    out = groebner.ideal_quotient(ideal, f, deadline=args.gb_deadline)
    _emit(args, _ideal_doc(out),
          [render_polynomial(g, out.nx, out.ny) for g in out.gens] or ["0"])
    return 0


def _cmd_saturate(args):
    doc = _load_doc(args)
    ideal = _ideal_from_doc(_require(doc, "ideal"))
    f = parse_polynomial(_require(doc, "f"), ideal.nx, ideal.ny)
    out = groebner.saturate(ideal, f, deadline=args.gb_deadline)
    _emit(args, _ideal_doc(out),
          [render_polynomial(g, out.nx, out.ny) for g in out.gens] or ["0"])
    return 0


def _order_from_doc(doc, ideal):
    spec = doc.get("order", "degrevlex")
    if spec == "degrevlex":
        return TermOrder.degrevlex(ideal.nvars)
    if spec == "deglex":
        return TermOrder.deglex(ideal.nvars)
    if isinstance(spec, dict) and "block" in spec:
        return TermOrder.elimination(spec["block"], ideal.nvars)
    raise _InputError(f"unknown order {spec!r}")


def _cmd_gb(args):
    doc = _load_doc(args)
    ideal = _ideal_from_doc(_require(doc, "ideal"))
    order = _order_from_doc(doc, ideal)
    gb = groebner.groebner_basis(ideal, order, deadline=args.gb_deadline)
    texts = [render_polynomial(g, ideal.nx, ideal.ny) for g in gb.basis]
    _emit(args, {"xvars": ideal.nx, "yvars": ideal.ny, "basis": texts},
          texts or ["0"])
    return 0


def _cmd_nf(args):
    doc = _load_doc(args)
    ideal = _ideal_from_doc(_require(doc, "ideal"))
    p = parse_polynomial(_require(doc, "p"), ideal.nx, ideal.ny)
    order = _order_from_doc(doc, ideal)
    gb = groebner.groebner_basis(ideal, order, deadline=args.gb_deadline)
    nf = groebner.normal_form(p, gb)
    text = render_polynomial(nf, ideal.nx, ideal.ny)
    _emit(args, {"normal_form": text}, [text])
    return 0


def _jonq_pieces(args):
    doc = _load_doc(args)
    support = maps.reduce_representative(_formset_from_doc(_require(doc, "support")))
    nvars = support.rep.nvars + 1
    q = _form_from_text(_require(doc, "q"), nvars)
    f = _form_from_text(_require(doc, "f"), nvars)
    return jonquieres.make_jonquieres(support, q, f)


def _jonq_doc(jmap):
    return {"support": _formset_doc(jmap.support.rep),
            "q": render_polynomial(jmap.q),
            "f": render_polynomial(jmap.f),
            "assembled": _formset_doc(jmap.assembled)}


def _cmd_jonq(args):
    jmap = _jonq_pieces(args)
    if args.action == "make":
        _emit(args, _jonq_doc(jmap),
              [render_polynomial(g) for g in jmap.assembled])
        return 0
    if args.action == "dual":
        dual = jonquieres.dual_jonquieres(jmap)
        _emit(args, _jonq_doc(dual),
              [f"q: {dual.q}", f"f: {dual.f}"]
              + [f"support: {g}" for g in dual.support.rep.forms])
        return 0
    criterion, commutes = jonquieres.commute_criterion(jmap)
    _emit(args, {"criterion": criterion, "commutes": commutes},
          [f"criterion: {str(criterion).lower()}",
           f"commutes: {str(commutes).lower()}"])
    return 0 if commutes else 1


# -- verify ------------------------------------------------------------------


def _bipoly(doc, key):
    nx = _require(doc, "xvars")
    ny = _require(doc, "yvars")
    return bigraded.BiPolynomial(
        parse_polynomial(_require(doc, key), nx, ny), nx, ny)


def _verify_once(law, doc):
    """Run one law on a parsed document; returns (holds, detail)."""
    if law == "matrix":
        nvars = _require(doc, "nvars")
        form = _form_from_text(_require(doc, "form"), nvars)
        return identities.matrix_identity_check(form), {}
    if law == "eval":
        mult = identities.eval_identity(_formset_from_doc(doc))
        return True, {"multiplier": render_polynomial(mult)}
    if law == "product":
        nvars = _require(doc, "nvars")
        p = _form_from_text(_require(doc, "p"), nvars)
        q = _form_from_text(_require(doc, "q"), nvars)
        return identities.product_rule(p, q), {}
    if law == "sum":
        nvars = _require(doc, "nvars")
        p = FormSet([_form_from_text(t, nvars) for t in _require(doc, "p")])
        q = FormSet([_form_from_text(t, nvars) for t in _require(doc, "q")])
        m = identities.sum_rule(p, q)
        return True, {"multipliers": [render_polynomial(x) for x in m]}
    if law == "composite":
        g = _formset_from_doc(_require(doc, "g"))
        h = _formset_from_doc(_require(doc, "h"))
        mult = identities.composite_identity(g, h)
        return True, {"multiplier": render_polynomial(mult)}
    if law == "bidual":
        p = _bipoly(doc, "p")
        mult = bigraded.bidual_eval(p)
        return True, {"multiplier": render_polynomial(mult, p.nx, p.ny)}
    if law == "psi-laws":
        p = _bipoly(doc, "p")
        q = _bipoly(doc, "q")
        w = bigraded.psi_laws_witness(p, q)
        render = lambda m: render_polynomial(m, p.nx, p.ny)  # noqa: E731
        return True, {"add": [render(m) for m in w.add],
                      "mul": [render(m) for m in w.mul]}
    if law == "push":
        nx = _require(doc, "xvars")
        ny = _require(doc, "yvars")
        p = bigraded.BiPolynomial(parse_polynomial(_require(doc, "p"), nx, ny),
                                  nx, ny)
        g = FormSet([_form_from_text(t, nx) for t in _require(doc, "forms")])
        return bigraded.push_relation(p, g), {}
    raise _InputError(f"unknown law {law!r}")


def _random_doc(law, rng):
    """Sample one valid instance document for the law."""
    if law == "matrix":
        nvars = rng.randint(2, 4)
        form = samples.random_form(rng, nvars, rng.randint(1, 4))
        return {"nvars": nvars, "form": render_polynomial(form)}
    if law == "eval":
        return _formset_doc(samples.random_formset(rng))
    if law == "product":
        nvars = rng.randint(2, 4)
        p = samples.random_form(rng, nvars, rng.randint(1, 3))
        q = samples.random_form(rng, nvars, rng.randint(1, 3))
        return {"nvars": nvars, "p": render_polynomial(p),
                "q": render_polynomial(q)}
    if law == "sum":
        while True:
            p = samples.random_formset(rng)
            q = FormSet([samples.random_form(rng, p.nvars, p.degree)
                         for _ in range(len(p))])
            if all((a + b).terms for a, b in zip(p.forms, q.forms)):
                return {"nvars": p.nvars,
                        "p": [render_polynomial(f) for f in p.forms],
                        "q": [render_polynomial(f) for f in q.forms]}
    if law == "composite":
        while True:
            nvars = rng.randint(2, 3)
            dg = rng.randint(1, 2)
            g = FormSet([samples.random_form(rng, nvars, dg, 3)
                         for _ in range(rng.randint(1, 3))])
            target = rng.randint(2, 3)
            dh = rng.randint(1, 2)
            h = FormSet([samples.random_form(rng, target, dh, 3)
                         for _ in range(nvars)])
            if all(f.evaluate(h.forms).terms for f in g.forms):
                return {"g": _formset_doc(g), "h": _formset_doc(h)}
    if law == "bidual":
        nx, ny = rng.randint(2, 4), rng.randint(1, 3)
        p = samples.random_bipolynomial(rng, nx, ny, rng.randint(1, 3),
                                        rng.randint(0, 2))
        return {"xvars": nx, "yvars": ny,
                "p": render_polynomial(p, nx, ny)}
    if law == "psi-laws":
        nx, ny = rng.randint(2, 3), rng.randint(1, 2)
        dx, dy = rng.randint(0, 2), rng.randint(0, 2)
        p = samples.random_bipolynomial(rng, nx, ny, dx, dy)
        q = samples.random_bipolynomial(rng, nx, ny, dx, dy)
        return {"xvars": nx, "yvars": ny,
                "p": render_polynomial(p, nx, ny),
                "q": render_polynomial(q, nx, ny)}
    if law == "push":
        nx = rng.randint(2, 3)
        g = samples.random_formset(rng, max_nvars=nx, max_forms=3)
        ny = len(g)
        nx = g.nvars
        total = nx + ny
        relation = Polynomial.zero(total)
        # random biform combination of Koszul relations, always a relation
        for _ in range(rng.randint(1, 2)):
            i, j = rng.randrange(ny), rng.randrange(ny)
            if i == j:
                continue
            koszul = (g.forms[j].extend(total)
                      * Polynomial.variable(nx + i, total)
                      - g.forms[i].extend(total)
                      * Polynomial.variable(nx + j, total))
            multiplier = Polynomial.monomial(
                samples.random_exponent(rng, nx, 1) + (0,) * ny, total)
            relation = relation + multiplier * koszul
        if not relation.terms:
            return _random_doc(law, rng)
        return {"xvars": nx, "yvars": ny,
                "p": render_polynomial(relation, nx, ny),
                "forms": [render_polynomial(f) for f in g.forms]}
    raise _InputError(f"unknown law {law!r}")


def _cmd_verify(args):
    if args.random:
        rng = samples.rng_from_seed(args.seed)
        failures = 0
        for _ in range(args.random):
            holds, _ = _verify_once(args.law, _random_doc(args.law, rng))
            if not holds:
                failures += 1
        doc = {"law": args.law, "instances": args.random,
               "failures": failures, "holds": failures == 0}
        _emit(args, doc, [f"{args.law}: {args.random - failures}/"
                          f"{args.random} hold"])
        return 0 if failures == 0 else 1
    holds, detail = _verify_once(args.law, _load_doc(args))
    doc = {"law": args.law, "holds": holds}
    doc.update(detail)
    lines = [f"{args.law}: {'holds' if holds else 'fails'}"]
    lines += [f"{k}: {v}" for k, v in detail.items()]
    _emit(args, doc, lines)
    return 0 if holds else 1


# -- entry point ---------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE",
                        help="JSON input document (default: stdin)")
    common.add_argument("--json", action="store_true",
                        help="emit a JSON document instead of plain lines")
    common.add_argument("--seed", type=int, default=0, metavar="N",
                        help="seed for randomized property suites")
    common.add_argument("--gb-deadline", type=float, default=None,
                        metavar="SECONDS",
                        help="cooperative deadline for Groebner computations")

    parser = argparse.ArgumentParser(
        prog="newtondual",
        description="Newton complementary duality calculus for form sets")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("dual", parents=[common]).set_defaults(run=_cmd_dual)
    p = sub.add_parser("magnus", parents=[common])
    p.add_argument("n", type=int)
    p.set_defaults(run=_cmd_magnus)
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--law", required=True,
                   choices=["matrix", "eval", "product", "sum", "composite",
                            "bidual", "psi-laws", "push"])
    p.add_argument("--random", type=int, default=0, metavar="COUNT",
                   help="run COUNT random instances instead of reading input")
    p.set_defaults(run=_cmd_verify)
    sub.add_parser("compose", parents=[common]).set_defaults(run=_cmd_compose)
    sub.add_parser("reduce", parents=[common]).set_defaults(run=_cmd_reduce)
    sub.add_parser("samemap", parents=[common]).set_defaults(run=_cmd_samemap)
    sub.add_parser("invfactor", parents=[common]).set_defaults(run=_cmd_invfactor)
    p = sub.add_parser("mono-inverse", parents=[common])
    p.add_argument("--cap", type=int, default=10,
                   help="largest inverse degree searched")
    p.set_defaults(run=_cmd_mono_inverse)
    sub.add_parser("magnus-commute", parents=[common]).set_defaults(
        run=_cmd_magnus_commute)
    sub.add_parser("kernel", parents=[common]).set_defaults(run=_cmd_kernel)
    sub.add_parser("rees", parents=[common]).set_defaults(run=_cmd_rees)
    sub.add_parser("psi", parents=[common]).set_defaults(run=_cmd_psi)
    sub.add_parser("mainrees", parents=[common]).set_defaults(run=_cmd_mainrees)
    sub.add_parser("quotient", parents=[common]).set_defaults(run=_cmd_quotient)
    sub.add_parser("saturate", parents=[common]).set_defaults(run=_cmd_saturate)
    sub.add_parser("gb", parents=[common]).set_defaults(run=_cmd_gb)
    sub.add_parser("nf", parents=[common]).set_defaults(run=_cmd_nf)
    p = sub.add_parser("jonq", parents=[common])
    p.add_argument("action", choices=["make", "dual", "commute"])
    p.set_defaults(run=_cmd_jonq)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (NotInverseError, NotBirationalError, IdentityViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NewtonDualError, _InputError, json.JSONDecodeError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
