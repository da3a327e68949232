import random

import pytest

from orienteq import (
    InvalidInputError,
    Multigraph,
    NoTotallyCyclicError,
    NormalContext,
    Orientation,
    StageState,
    activities,
    classes,
    contraction_of,
    eulerian_equivalent,
    forward,
    in_stage_set,
    inverse,
    inverse_stage,
    is_reduced,
    is_totally_cyclic,
    normalize,
    restricted_orientations,
    stage_conditions,
    stage_step,
    spanning_forests,
    tutte_deletion_contraction,
)
from orienteq.bijection import initial_state
from orienteq.corpus import named_graphs

NG = named_graphs()

BRIDGELESS = ("C3", "C4", "D2", "P3E", "L1", "K4", "K4me", "theta")


def context(name, normal=None):
    g = NG[name]
    if normal is None:
        return NormalContext.with_default_normal(g)
    bits = tuple(ch == "+" for ch in normal)
    return NormalContext(g, bits)


def state_for(ctx, string):
    eps = Orientation.from_string(ctx.graph.full_view(), string)
    return initial_state(ctx, eps)


def test_contraction_of():
    ctx = context("C3")
    st = state_for(ctx, "+++")
    view, eps = contraction_of(st)
    assert view == ctx.graph.full_view()
    assert eps.as_string() == "+++"

    st = StageState(ctx, (True, True, "U"))
    view, eps = contraction_of(st)
    assert view.cls(0) == view.cls(2)
    assert view.present_edges() == [1, 2]
    assert eps.arc(1) == (0, 1) and eps.arc(2) == (1, 0)

    st = StageState(ctx, ("U", "U", "D"))
    view, eps = contraction_of(st)
    assert view.present_edges() == []


def test_is_reduced():
    ctx = context("C3")
    assert is_reduced(state_for(ctx, "+++"))
    assert not is_reduced(state_for(ctx, "---"))
    assert is_reduced(StageState(ctx, (True, True, False)))  # "++-" has no cycle


def test_normalize():
    ctx = context("C3")
    assert normalize(state_for(ctx, "---")) == state_for(ctx, "+++")
    assert normalize(state_for(ctx, "+++")) == state_for(ctx, "+++")

    d2 = context("D2", "+-")
    assert normalize(state_for(d2, "-+")) == state_for(d2, "+-")

    with pytest.raises(InvalidInputError):
        normalize(StageState(context("C3"), (True, True, False)))


def test_stage_trace_c3():
    ctx = context("C3")
    log = []
    tree = forward(ctx, Orientation.from_string(ctx.graph.full_view(), "+++"), log=log)
    assert tree == (2, 3)
    actions = [(ev["action"], ev["edge"]) for ev in log if ev["action"] != "normalize-reversal"]
    assert actions == [("unorient", 3), ("unorient", 2), ("delete", 1)]


def test_forward_examples():
    ctx = context("C3")
    v = ctx.graph.full_view()
    assert forward(ctx, Orientation.from_string(v, "+++")) == (2, 3)
    assert forward(ctx, Orientation.from_string(v, "---")) == (2, 3)

    d2 = context("D2", "+-")
    assert forward(d2, Orientation.from_string(d2.graph.full_view(), "+-")) == (2,)


def test_forward_rejects_non_totally_cyclic():
    ctx = context("C3")
    with pytest.raises(NoTotallyCyclicError):
        forward(ctx, Orientation.from_string(ctx.graph.full_view(), "++-"))
    b1 = context("B1")
    for s in ("+", "-"):
        with pytest.raises(NoTotallyCyclicError):
            forward(b1, Orientation.from_string(b1.graph.full_view(), s))


def test_forward_rejects_disconnected():
    g = Multigraph(4, ((0, 1), (1, 0), (2, 3), (3, 2)))
    ctx = NormalContext.with_default_normal(g)
    eps = Orientation.from_string(g.full_view(), "+-+-")
    with pytest.raises(InvalidInputError):
        forward(ctx, eps)


def test_inverse_examples():
    ctx = context("C3")
    assert inverse(ctx, (2, 3)).as_string() == "+++"
    with pytest.raises(InvalidInputError):
        inverse(ctx, (1, 2))  # internal activity (2,0)
    d2 = context("D2", "+-")
    assert inverse(d2, (2,)).as_string() == "+-"
    with pytest.raises(NoTotallyCyclicError):
        inverse(context("B1"), (1,))


def test_inverse_stage_deleted_case():
    ctx = context("C3")
    st = StageState(ctx, ("D", "U", "U"))
    prev = inverse_stage(st, 3)
    assert prev.statuses == (True, "U", "U")
    # walking all the way back reproduces the reduced representative
    prev = inverse_stage(prev, 2)
    prev = inverse_stage(prev, 1)
    assert prev == state_for(ctx, "+++")


def test_reduced_uniqueness_per_class():
    for name in BRIDGELESS:
        ctx = context(name)
        v = ctx.graph.full_view()
        for block in classes(v, "eulerian", "totally_cyclic").blocks:
            states = [initial_state(ctx, eps) for eps in block]
            reduced = [st for st in states if is_reduced(st)]
            assert len(reduced) == 1, name
            for st in states:
                assert normalize(st) == reduced[0]
                assert normalize(normalize(st)) == reduced[0]


def test_normalize_is_choice_independent():
    for name in ("C3", "P3E", "K4", "theta"):
        ctx = context(name)
        v = ctx.graph.full_view()
        for eps in restricted_orientations(v, "totally_cyclic"):
            st = initial_state(ctx, eps)
            fixed = normalize(st)
            for seed in range(10):
                assert normalize(st, rng=random.Random(seed)) == fixed, name


def test_stage_conditions_hold_along_every_run():
    for name in ("C3", "D2", "P3E", "C4", "theta"):
        ctx = context(name)
        v = ctx.graph.full_view()
        for eps in restricted_orientations(v, "totally_cyclic"):
            st = normalize(initial_state(ctx, eps))
            for _ in range(ctx.graph.edge_count):
                st = stage_step(st)  # stage_step asserts (a)-(d) internally
                assert in_stage_set(st)
                conds = stage_conditions(st)
                assert all(conds.values()), (name, conds)


def test_stage_step_is_injective_on_realized_states():
    for name in ("C3", "D2", "P3E", "C4", "theta", "K4me"):
        ctx = context(name)
        v = ctx.graph.full_view()
        layers = {0: {normalize(initial_state(ctx, eps)) for eps in
                      restricted_orientations(v, "totally_cyclic")}}
        for k in range(1, ctx.graph.edge_count + 1):
            images = {}
            for st in layers[k - 1]:
                nxt = stage_step(st)
                assert nxt not in images, (name, k)
                images[nxt] = st
            layers[k] = set(images)
            # inverse_stage is a two-sided inverse on this layer
            for nxt, st in images.items():
                assert inverse_stage(nxt, k) == st, (name, k)


def test_global_bijection_and_class_invariance():
    for name in BRIDGELESS:
        ctx = context(name)
        v = ctx.graph.full_view()
        poly = tutte_deletion_contraction(v)
        blocks = classes(v, "eulerian", "totally_cyclic").blocks
        images = set()
        for block in blocks:
            trees = {forward(ctx, eps) for eps in block}
            assert len(trees) == 1, name  # constant on Eulerian blocks
            images |= trees
        assert len(images) == len(blocks), name  # injective on classes
        zero_internal = {
            f
            for f in spanning_forests(v)
            if activities(v, f)[0] == 0
        }
        assert images == zero_internal, name  # surjective onto the target
        assert len(images) == poly.evaluate(0, 1), name
        for tree in zero_internal:
            eps = inverse(ctx, tree)
            assert is_totally_cyclic(v, eps)
            assert is_reduced(initial_state(ctx, eps))
            assert forward(ctx, eps) == tree, name


def test_bijection_under_random_orders_and_normals():
    rng = random.Random(2024)
    for name in ("C3", "D2", "P3E", "theta"):
        g = NG[name]
        for _ in range(5):
            order = list(g.edge_ids)
            rng.shuffle(order)
            rg = g.reorder(tuple(order))
            v = rg.full_view()
            t01 = tutte_deletion_contraction(v).evaluate(0, 1)
            for _ in range(3):
                normal = tuple(rng.random() < 0.5 for _ in rg.edge_ids)
                ctx = NormalContext(rg, normal)
                blocks = classes(v, "eulerian", "totally_cyclic").blocks
                images = {forward(ctx, block[0]) for block in blocks}
                assert len(images) == len(blocks) == t01
                for block in blocks:
                    assert all(forward(ctx, eps) == forward(ctx, block[0]) for eps in block)
                for tree in images:
                    assert forward(ctx, inverse(ctx, tree)) == tree


def test_forward_constant_on_equivalent_pairs():
    for name in ("C3", "D2", "P3E", "C4"):
        ctx = context(name)
        v = ctx.graph.full_view()
        pool = restricted_orientations(v, "totally_cyclic")
        for a in pool:
            for b in pool:
                if eulerian_equivalent(a, b):
                    assert forward(ctx, a) == forward(ctx, b)


def test_empty_graph_base_case():
    g = Multigraph(1, ())
    ctx = NormalContext.with_default_normal(g)
    eps = Orientation.from_string(g.full_view(), "")
    assert forward(ctx, eps) == ()
    assert inverse(ctx, ()).as_string() == ""
