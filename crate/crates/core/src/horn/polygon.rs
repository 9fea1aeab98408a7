use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use super::{gcd_i64, HornSystem};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonSide {
    /// Primitive outer normal.
    pub normal: [i64; 2],
    /// Primitive tangent, the normal turned a quarter counterclockwise.
    pub tangent: [i64; 2],
    pub multiplicity: i64,
}

impl PolygonSide {
    pub fn edge(&self) -> [i64; 2] {
        [self.tangent[0] * self.multiplicity, self.tangent[1] * self.multiplicity]
    }
}

/// The Ore–Sato polygon: sides counterclockwise starting from the lowest
/// (then leftmost) vertex, translated so the bounding box starts at the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePolygon {
    pub sides: Vec<PolygonSide>,
    pub vertices: Vec<[i64; 2]>,
    /// Minkowski summands `rot90(Â_i)` when the rows pair up.
    pub segments: Option<Vec<[i64; 2]>>,
}

pub(crate) fn rot90(v: [i64; 2]) -> [i64; 2] {
    [-v[1], v[0]]
}

fn primitive(v: [i64; 2]) -> ([i64; 2], i64) {
    let g = gcd_i64(v[0], v[1]);
    ([v[0] / g, v[1] / g], g)
}

fn half_plane(v: [i64; 2]) -> u8 {
    if v[1] > 0 || (v[1] == 0 && v[0] > 0) {
        0
    } else {
        1
    }
}

/// Orders nonzero vectors by angle in `[0, 2π)`.
fn angle_cmp(a: [i64; 2], b: [i64; 2]) -> Ordering {
    half_plane(a).cmp(&half_plane(b)).then_with(|| {
        let cross = a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128;
        0.cmp(&cross)
    })
}

impl HornSystem {
    pub fn polygon(&self) -> Result<LatticePolygon> {
        if !self.is_nonconfluent() {
            return Err(Error::NotNonconfluent);
        }
        let mut groups: BTreeMap<[i64; 2], i64> = BTreeMap::new();
        for r in self.rows() {
            let (n, g) = primitive(*r);
            *groups.entry(n).or_default() += g;
        }
        let mut sides: Vec<PolygonSide> = groups
            .into_iter()
            .map(|(normal, multiplicity)| PolygonSide { normal, tangent: rot90(normal), multiplicity })
            .collect();
        sides.sort_by(|a, b| angle_cmp(a.tangent, b.tangent));

        let mut vertices = Vec::with_capacity(sides.len());
        let mut cur = [0i64, 0];
        for side in &sides {
            vertices.push(cur);
            let e = side.edge();
            cur = [cur[0] + e[0], cur[1] + e[1]];
        }
        debug_assert_eq!(cur, [0, 0]);
        let min_x = vertices.iter().map(|v| v[0]).min().unwrap_or(0);
        let min_y = vertices.iter().map(|v| v[1]).min().unwrap_or(0);
        for v in &mut vertices {
            v[0] -= min_x;
            v[1] -= min_y;
        }
        let segments = self.zonotope_pairing().ok().map(|p| p.hat_rows.iter().map(|r| rot90(*r)).collect());
        Ok(LatticePolygon { sides, vertices, segments })
    }
}
