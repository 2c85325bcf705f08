"""Exact computation with almost-identity partial bijections of the naturals."""

from ._core import (
    Element,
    IinfError,
    class_label,
    common_member,
    cong_related,
    d_witness,
    enumerate_window,
    evaluate,
    f_solver,
    fiber_count,
    green,
    j_factor,
    member,
    nat_leq,
    parse,
    principal_congruence,
    separate,
    sign,
    solve_left,
    solve_right,
    to_idempotent,
    verify,
    window_count,
)

__all__ = [
    "Element",
    "IinfError",
    "class_label",
    "common_member",
    "cong_related",
    "d_witness",
    "enumerate_window",
    "evaluate",
    "f_solver",
    "fiber_count",
    "green",
    "j_factor",
    "member",
    "nat_leq",
    "parse",
    "principal_congruence",
    "separate",
    "sign",
    "solve_left",
    "solve_right",
    "to_idempotent",
    "verify",
    "window_count",
]
