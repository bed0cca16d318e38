//! Shared inputs for the `linegeom` benchmarks.

use linegeom::{Color, FieldContext, ProjPoint};

/// The four points of the worked blue example.
pub fn example_points() -> [ProjPoint; 4] {
    let q = FieldContext::rationals();
    [(1, 0), (2, 3), (4, -1), (3, 5)].map(|(x, y)| ProjPoint::from_ints(&q, x, y).unwrap())
}

/// Every point of the projective line over `F_p` that is not null in `color`.
pub fn non_null_points(p: u64, color: Color) -> Vec<ProjPoint> {
    let ctx = FieldContext::prime(p).unwrap();
    ProjPoint::all(&ctx)
        .unwrap()
        .into_iter()
        .filter(|a| !linegeom::chromo::is_null_in(color, a))
        .collect()
}
