"""Shared test helpers."""


def doc_of(ds):
    """Re-serialize a dataset to a plain JSON document for mutation tests."""
    return {
        "version": "1",
        "groups": [
            {
                "name": rec.name,
                "order_factored": [[p, e] for p, e in rec.order_factored.factors],
                "degrees": list(rec.degrees),
                "schur_multiplier_factored": [[p, e] for p, e in
                                              rec.schur_multiplier.factors],
                "cover_witnesses": [{"divisor": w.divisor, "degree": w.degree}
                                    for w in rec.cover_witnesses],
                "min_faithful_degree": {str(p): d for p, d in
                                        rec.min_faithful_degree.items()},
            }
            for rec in ds.records.values()
        ],
        "thresholds": {
            "generic_min_codegrees": ds.thresholds.generic_min_codegrees,
            "exceptional_min_codegrees": ds.thresholds.exceptional_min_codegrees,
        },
        "exceptional_pairs": [list(p) for p in ds.exceptional_pairs],
    }
