//! Consistent triangulations of polygonal domains: structured generation,
//! uniform red refinement, boundary tagging and validation.
//!
//! Boundary faces carry one of four tags. `Gamma1` is the flux (Neumann-type)
//! part, `Gamma21`/`Gamma22` split the Robin part according to whether
//! alpha matches nu.c there, and `Gamma3` is the Dirichlet part.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use crate::geom::{self, midpoint, norm, sub, Vec2};
use crate::problem::ProblemSpec;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FaceKind {
    Interior,
    Gamma1,
    Gamma21,
    Gamma22,
    Gamma3,
}

impl FaceKind {
    pub fn is_boundary(self) -> bool {
        self != FaceKind::Interior
    }

    pub fn is_gamma2(self) -> bool {
        matches!(self, FaceKind::Gamma21 | FaceKind::Gamma22)
    }
}

impl fmt::Display for FaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FaceKind::Interior => "interior",
            FaceKind::Gamma1 => "Gamma1",
            FaceKind::Gamma21 => "Gamma2,1",
            FaceKind::Gamma22 => "Gamma2,2",
            FaceKind::Gamma3 => "Gamma3",
        };
        f.write_str(s)
    }
}

/// Coarse per-side tag used by the structured generator; `Gamma2` is refined
/// into `Gamma21`/`Gamma22` by [`classify_boundary`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoarseTag {
    Gamma1,
    Gamma2,
    Gamma3,
}

impl CoarseTag {
    fn face_kind(self) -> FaceKind {
        match self {
            CoarseTag::Gamma1 => FaceKind::Gamma1,
            // Unclassified Robin faces start as Gamma22; see classify_boundary.
            CoarseTag::Gamma2 => FaceKind::Gamma22,
            CoarseTag::Gamma3 => FaceKind::Gamma3,
        }
    }
}

/// Boundary-tag assignment rule for the unit-square generator, by side.
#[derive(Clone, Copy, Debug)]
pub struct SideLayout {
    pub left: CoarseTag,
    pub right: CoarseTag,
    pub bottom: CoarseTag,
    pub top: CoarseTag,
}

impl SideLayout {
    pub fn all_dirichlet() -> Self {
        SideLayout {
            left: CoarseTag::Gamma3,
            right: CoarseTag::Gamma3,
            bottom: CoarseTag::Gamma3,
            top: CoarseTag::Gamma3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Face {
    pub id: usize,
    /// Endpoint vertex indices.
    pub vertices: [usize; 2],
    /// Adjacent triangle with the lower index; the normal points out of it.
    pub owner: usize,
    pub neighbor: Option<usize>,
    /// Unit normal, outward from the owner triangle.
    pub normal: Vec2,
    pub length: f64,
    pub kind: FaceKind,
}

impl Face {
    pub fn midpoint(&self, mesh: &Mesh) -> Vec2 {
        midpoint(mesh.vertices[self.vertices[0]], mesh.vertices[self.vertices[1]])
    }
}

#[derive(Clone, Debug)]
pub struct Mesh {
    pub vertices: Vec<Vec2>,
    /// Counterclockwise vertex triples.
    pub triangles: Vec<[usize; 3]>,
    pub faces: Vec<Face>,
    /// For each triangle, the ids of its three faces; local face i is
    /// opposite local vertex i.
    pub triangle_faces: Vec<[usize; 3]>,
    /// Refinement depth relative to the generating mesh.
    pub level: usize,
}

/// Violations reported by [`Mesh::verify_consistency`].
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    /// A vertex pair is shared by more than two triangles (or listed twice).
    FaceMultiplicity { vertices: [usize; 2], count: usize },
    /// Triangle with non-positive (clockwise or degenerate) area.
    Orientation { triangle: usize, area: f64 },
    /// Boundary face without a boundary tag, or interior face with one.
    TagGap { face: usize, kind: FaceKind },
    /// Face normal is not unit or does not point out of the owner.
    NormalError { face: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FaceMultiplicity { vertices, count } => {
                write!(f, "edge ({}, {}) is shared by {} triangles", vertices[0], vertices[1], count)
            }
            Violation::Orientation { triangle, area } => {
                write!(f, "triangle {} has non-positive signed area {}", triangle, area)
            }
            Violation::TagGap { face, kind } => {
                write!(f, "face {} has inconsistent tag {}", face, kind)
            }
            Violation::NormalError { face } => write!(f, "face {} has a bad normal", face),
        }
    }
}

/// Note emitted by [`classify_boundary`] when alpha - nu.c changes sign
/// along a single Gamma2 face, so no facewise tag is faithful.
#[derive(Clone, Debug)]
pub struct MixedSignFace {
    pub face: usize,
    pub values: (f64, f64),
}

fn local_faces() -> [[usize; 2]; 3] {
    // face i is opposite vertex i
    [[1, 2], [2, 0], [0, 1]]
}

fn edge_key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Mesh {
    /// Builds face adjacency from raw vertex/triangle/boundary-tag data.
    /// No validation beyond multiplicity bookkeeping is performed here; call
    /// [`Mesh::verify_consistency`] to audit the result.
    pub fn from_raw(
        vertices: Vec<Vec2>,
        triangles: Vec<[usize; 3]>,
        boundary_tags: &[([usize; 2], FaceKind)],
    ) -> Self {
        let tag_map: HashMap<(usize, usize), FaceKind> = boundary_tags
            .iter()
            .map(|(vs, k)| (edge_key(vs[0], vs[1]), *k))
            .collect();

        let mut face_index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut faces: Vec<Face> = Vec::new();
        let mut triangle_faces = vec![[usize::MAX; 3]; triangles.len()];

        for (t, tri) in triangles.iter().enumerate() {
            for (lf, lv) in local_faces().iter().enumerate() {
                let a = tri[lv[0]];
                let b = tri[lv[1]];
                let key = edge_key(a, b);
                match face_index.get(&key) {
                    None => {
                        let id = faces.len();
                        face_index.insert(key, id);
                        let pa = vertices[a];
                        let pb = vertices[b];
                        let len = norm(sub(pb, pa));
                        faces.push(Face {
                            id,
                            vertices: [a, b],
                            owner: t,
                            neighbor: None,
                            normal: [0.0, 0.0],
                            length: len,
                            kind: FaceKind::Interior,
                        });
                        triangle_faces[t][lf] = id;
                    }
                    Some(&id) => {
                        if faces[id].neighbor.is_none() && faces[id].owner != t {
                            faces[id].neighbor = Some(t);
                        }
                        triangle_faces[t][lf] = id;
                    }
                }
            }
        }

        // Normals outward from the owner, and boundary tags.
        for face in faces.iter_mut() {
            let pa = vertices[face.vertices[0]];
            let pb = vertices[face.vertices[1]];
            let d = sub(pb, pa);
            let len = norm(d);
            let mut n = [d[1] / len, -d[0] / len];
            let tri = triangles[face.owner];
            let centroid = [
                (vertices[tri[0]][0] + vertices[tri[1]][0] + vertices[tri[2]][0]) / 3.0,
                (vertices[tri[0]][1] + vertices[tri[1]][1] + vertices[tri[2]][1]) / 3.0,
            ];
            let mid = midpoint(pa, pb);
            if geom::dot(n, sub(mid, centroid)) < 0.0 {
                n = [-n[0], -n[1]];
            }
            face.normal = n;
            if face.neighbor.is_none() {
                if let Some(kind) = tag_map.get(&edge_key(face.vertices[0], face.vertices[1])) {
                    face.kind = *kind;
                }
            }
        }

        Mesh { vertices, triangles, faces, triangle_faces, level: 0 }
    }

    pub fn triangle_vertices(&self, t: usize) -> [Vec2; 3] {
        let tri = self.triangles[t];
        [self.vertices[tri[0]], self.vertices[tri[1]], self.vertices[tri[2]]]
    }

    pub fn affine_map(&self, t: usize) -> geom::AffineMap {
        let [p0, p1, p2] = self.triangle_vertices(t);
        geom::AffineMap::new(p0, p1, p2)
    }

    pub fn triangle_area(&self, t: usize) -> f64 {
        self.affine_map(t).area()
    }

    /// Longest edge of triangle `t`.
    pub fn triangle_diameter(&self, t: usize) -> f64 {
        let [p0, p1, p2] = self.triangle_vertices(t);
        norm(sub(p1, p0)).max(norm(sub(p2, p1))).max(norm(sub(p0, p2)))
    }

    /// h = max over triangles of the longest edge.
    pub fn mesh_size(&self) -> f64 {
        (0..self.triangles.len()).map(|t| self.triangle_diameter(t)).fold(0.0, f64::max)
    }

    pub fn total_area(&self) -> f64 {
        (0..self.triangles.len()).map(|t| self.triangle_area(t)).sum()
    }

    pub fn boundary_perimeter(&self) -> f64 {
        self.faces.iter().filter(|f| f.neighbor.is_none()).map(|f| f.length).sum()
    }

    /// Max over elements of circumradius / inradius.
    pub fn shape_regularity_ratio(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for t in 0..self.triangles.len() {
            let [p0, p1, p2] = self.triangle_vertices(t);
            let a = norm(sub(p2, p1));
            let b = norm(sub(p0, p2));
            let c = norm(sub(p1, p0));
            let area = self.triangle_area(t);
            let circum = a * b * c / (4.0 * area);
            let inr = area / (0.5 * (a + b + c));
            worst = worst.max(circum / inr);
        }
        worst
    }

    /// Interior faces, then per-kind boundary counts.
    pub fn face_counts(&self) -> (usize, usize, usize, usize, usize) {
        let mut interior = 0;
        let mut g1 = 0;
        let mut g2 = 0;
        let mut g3 = 0;
        let mut untagged = 0;
        for f in &self.faces {
            match (f.neighbor.is_some(), f.kind) {
                (true, _) => interior += 1,
                (false, FaceKind::Gamma1) => g1 += 1,
                (false, FaceKind::Gamma21) | (false, FaceKind::Gamma22) => g2 += 1,
                (false, FaceKind::Gamma3) => g3 += 1,
                (false, FaceKind::Interior) => untagged += 1,
            }
        }
        (interior, g1, g2, g3, untagged)
    }

    /// Report-only audit of the consistency requirements: interior faces
    /// shared by exactly two triangles, boundary faces by one, positive
    /// orientation, complete boundary tags, unit outward normals.
    pub fn verify_consistency(&self) -> Vec<Violation> {
        let mut violations = Vec::new();

        let mut mult: HashMap<(usize, usize), usize> = HashMap::new();
        for tri in &self.triangles {
            for lv in local_faces() {
                *mult.entry(edge_key(tri[lv[0]], tri[lv[1]])).or_insert(0) += 1;
            }
        }
        let mut offenders: Vec<((usize, usize), usize)> =
            mult.into_iter().filter(|&(_, c)| c > 2).collect();
        offenders.sort();
        for ((a, b), count) in offenders {
            violations.push(Violation::FaceMultiplicity { vertices: [a, b], count });
        }

        for t in 0..self.triangles.len() {
            let area = 0.5 * self.affine_map(t).det;
            if area <= 0.0 {
                violations.push(Violation::Orientation { triangle: t, area });
            }
        }

        for face in &self.faces {
            match (face.neighbor.is_some(), face.kind) {
                (true, FaceKind::Interior) | (false, FaceKind::Gamma1) => {}
                (false, FaceKind::Gamma21) | (false, FaceKind::Gamma22) => {}
                (false, FaceKind::Gamma3) => {}
                (_, kind) => violations.push(Violation::TagGap { face: face.id, kind }),
            }
            let n = face.normal;
            if (norm(n) - 1.0).abs() > 1e-14 {
                violations.push(Violation::NormalError { face: face.id });
                continue;
            }
            let tri = self.triangles[face.owner];
            let centroid = [
                (self.vertices[tri[0]][0] + self.vertices[tri[1]][0] + self.vertices[tri[2]][0]) / 3.0,
                (self.vertices[tri[0]][1] + self.vertices[tri[1]][1] + self.vertices[tri[2]][1]) / 3.0,
            ];
            if geom::dot(n, sub(face.midpoint(self), centroid)) <= 0.0 {
                violations.push(Violation::NormalError { face: face.id });
            }
        }

        violations
    }

    /// Red refinement: each triangle splits into 4 similar children through
    /// the edge midpoints; boundary tags are inherited from the parent face.
    pub fn refine_uniform(&self) -> Mesh {
        let mut vertices = self.vertices.clone();
        let mut face_mid = vec![0usize; self.faces.len()];
        for face in &self.faces {
            let m = face.midpoint(self);
            face_mid[face.id] = vertices.len();
            vertices.push(m);
        }

        let mut triangles = Vec::with_capacity(4 * self.triangles.len());
        for (t, tri) in self.triangles.iter().enumerate() {
            let [v0, v1, v2] = *tri;
            let m0 = face_mid[self.triangle_faces[t][0]]; // midpoint opposite v0
            let m1 = face_mid[self.triangle_faces[t][1]];
            let m2 = face_mid[self.triangle_faces[t][2]];
            triangles.push([v0, m2, m1]);
            triangles.push([v1, m0, m2]);
            triangles.push([v2, m1, m0]);
            triangles.push([m0, m1, m2]);
        }

        let mut boundary_tags = Vec::new();
        for face in &self.faces {
            if face.neighbor.is_none() {
                let m = face_mid[face.id];
                boundary_tags.push(([face.vertices[0], m], face.kind));
                boundary_tags.push(([m, face.vertices[1]], face.kind));
            }
        }

        let mut refined = Mesh::from_raw(vertices, triangles, &boundary_tags);
        refined.level = self.level + 1;
        refined
    }

    /// Re-tags Gamma2 boundary faces as Gamma21 where alpha = nu.c at the
    /// face midpoint (within `tol`), else Gamma22. Faces on which the
    /// classifier changes sign along the face are reported, not decided.
    pub fn classify_boundary(&self, p: &ProblemSpec, tol: f64) -> (Mesh, Vec<MixedSignFace>) {
        let mut mesh = self.clone();
        let mut mixed = Vec::new();
        for face in mesh.faces.iter_mut() {
            if !face.kind.is_gamma2() {
                continue;
            }
            let pa = self.vertices[face.vertices[0]];
            let pb = self.vertices[face.vertices[1]];
            let sample = |t: f64| {
                let x = [pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1])];
                (p.alpha_robin)(x) - geom::dot(face.normal, (p.convection)(x))
            };
            let s_mid = sample(0.5);
            face.kind = if s_mid.abs() <= tol { FaceKind::Gamma21 } else { FaceKind::Gamma22 };
            let class_mid = s_mid.abs() <= tol;
            let mut lo = s_mid;
            let mut hi = s_mid;
            let mut uniform = true;
            for t in [0.05, 0.275, 0.725, 0.95] {
                let s = sample(t);
                lo = lo.min(s);
                hi = hi.max(s);
                uniform &= (s.abs() <= tol) == class_mid;
            }
            // a strict sign change means the pointwise set {alpha = nu.c}
            // cuts through the face even if no sample lands on it
            if !uniform || (lo < -tol && hi > tol) {
                mixed.push(MixedSignFace { face: face.id, values: (lo, hi) });
            }
        }
        (mesh, mixed)
    }
}

/// Structured mesh of the unit square: n x n cells, each split along the
/// bottom-left to top-right diagonal; 2n^2 triangles, (n+1)^2 vertices.
pub fn generate_unit_square(n: usize, layout: SideLayout) -> Result<Mesh> {
    if n == 0 {
        return Err(Error::InvalidArgument("subdivision count n must be >= 1".into()));
    }
    let np = n + 1;
    let mut vertices = Vec::with_capacity(np * np);
    for j in 0..np {
        for i in 0..np {
            vertices.push([i as f64 / n as f64, j as f64 / n as f64]);
        }
    }
    let vid = |i: usize, j: usize| j * np + i;
    let mut triangles = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        for i in 0..n {
            let v00 = vid(i, j);
            let v10 = vid(i + 1, j);
            let v01 = vid(i, j + 1);
            let v11 = vid(i + 1, j + 1);
            triangles.push([v00, v10, v11]);
            triangles.push([v00, v11, v01]);
        }
    }
    let mut boundary_tags = Vec::with_capacity(4 * n);
    for i in 0..n {
        boundary_tags.push(([vid(i, 0), vid(i + 1, 0)], layout.bottom.face_kind()));
        boundary_tags.push(([vid(i, n), vid(i + 1, n)], layout.top.face_kind()));
        boundary_tags.push(([vid(0, i), vid(0, i + 1)], layout.left.face_kind()));
        boundary_tags.push(([vid(n, i), vid(n, i + 1)], layout.right.face_kind()));
    }
    Ok(Mesh::from_raw(vertices, triangles, &boundary_tags))
}

/// Reads the ASCII mesh format:
/// line 1 `nv nt nb`; nv lines `x y`; nt lines `i j k` (0-based, CCW);
/// nb lines `i j tag` with tag in {1, 21, 22, 3}.
pub fn read_mesh(path: &Path) -> Result<Mesh> {
    let text = std::fs::read_to_string(path)?;
    parse_mesh(&text)
}

pub fn parse_mesh(text: &str) -> Result<Mesh> {
    let mut tokens = text.split_whitespace();
    let mut next_usize = |what: &str| -> Result<usize> {
        tokens
            .next()
            .ok_or_else(|| Error::MeshFormat(format!("unexpected end of file reading {what}")))?
            .parse::<usize>()
            .map_err(|e| Error::MeshFormat(format!("bad {what}: {e}")))
    };
    let nv = next_usize("vertex count")?;
    let nt = next_usize("triangle count")?;
    let nb = next_usize("boundary edge count")?;

    let mut tokens = text.split_whitespace().skip(3);
    let mut next_f64 = |what: &str| -> Result<f64> {
        tokens
            .next()
            .ok_or_else(|| Error::MeshFormat(format!("unexpected end of file reading {what}")))?
            .parse::<f64>()
            .map_err(|e| Error::MeshFormat(format!("bad {what}: {e}")))
    };
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let x = next_f64("vertex x")?;
        let y = next_f64("vertex y")?;
        vertices.push([x, y]);
    }
    let mut triangles = Vec::with_capacity(nt);
    for _ in 0..nt {
        let i = next_f64("triangle index")? as usize;
        let j = next_f64("triangle index")? as usize;
        let k = next_f64("triangle index")? as usize;
        if i >= nv || j >= nv || k >= nv {
            return Err(Error::MeshFormat("triangle vertex index out of range".into()));
        }
        triangles.push([i, j, k]);
    }
    let mut boundary_tags = Vec::with_capacity(nb);
    for _ in 0..nb {
        let i = next_f64("boundary index")? as usize;
        let j = next_f64("boundary index")? as usize;
        let tag = next_f64("boundary tag")? as usize;
        let kind = match tag {
            1 => FaceKind::Gamma1,
            21 => FaceKind::Gamma21,
            22 => FaceKind::Gamma22,
            3 => FaceKind::Gamma3,
            other => return Err(Error::MeshFormat(format!("unknown boundary tag {other}"))),
        };
        boundary_tags.push(([i, j], kind));
    }
    Ok(Mesh::from_raw(vertices, triangles, &boundary_tags))
}

pub fn write_mesh(mesh: &Mesh, path: &Path) -> Result<()> {
    let mut out = String::new();
    let nb = mesh.faces.iter().filter(|f| f.neighbor.is_none()).count();
    out.push_str(&format!("{} {} {}\n", mesh.vertices.len(), mesh.triangles.len(), nb));
    for v in &mesh.vertices {
        out.push_str(&format!("{:.17} {:.17}\n", v[0], v[1]));
    }
    for t in &mesh.triangles {
        out.push_str(&format!("{} {} {}\n", t[0], t[1], t[2]));
    }
    for f in &mesh.faces {
        if f.neighbor.is_none() {
            let tag = match f.kind {
                FaceKind::Gamma1 => 1,
                FaceKind::Gamma21 => 21,
                FaceKind::Gamma22 => 22,
                FaceKind::Gamma3 => 3,
                FaceKind::Interior => {
                    return Err(Error::MeshFormat(format!("untagged boundary face {}", f.id)))
                }
            };
            out.push_str(&format!("{} {} {}\n", f.vertices[0], f.vertices[1], tag));
        }
    }
    std::fs::write(path, out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem;

    fn dirichlet_square(n: usize) -> Mesh {
        generate_unit_square(n, SideLayout::all_dirichlet()).unwrap()
    }

    #[test]
    fn unit_square_counts() {
        let m = dirichlet_square(2);
        assert_eq!(m.triangles.len(), 8);
        assert_eq!(m.vertices.len(), 9);
        let (interior, _, _, g3, untagged) = m.face_counts();
        assert_eq!(interior, 8);
        assert_eq!(g3, 8);
        assert_eq!(untagged, 0);
        assert_eq!(m.faces.len(), 16);
        // Euler: V - E + F(with outer) = 2
        let euler = m.vertices.len() as i64 - m.faces.len() as i64 + m.triangles.len() as i64 + 1;
        assert_eq!(euler, 2);
    }

    #[test]
    fn single_gamma1_side() {
        let layout = SideLayout {
            left: CoarseTag::Gamma1,
            right: CoarseTag::Gamma3,
            bottom: CoarseTag::Gamma3,
            top: CoarseTag::Gamma3,
        };
        let m = generate_unit_square(1, layout).unwrap();
        let g1 = m.faces.iter().filter(|f| f.kind == FaceKind::Gamma1).count();
        assert_eq!(g1, 1);
    }

    #[test]
    fn zero_subdivisions_rejected() {
        assert!(generate_unit_square(0, SideLayout::all_dirichlet()).is_err());
    }

    #[test]
    fn mesh_size_values() {
        let m1 = dirichlet_square(1);
        assert!((m1.mesh_size() - 2f64.sqrt()).abs() < 1e-15);
        let m4 = dirichlet_square(4);
        assert!((m4.mesh_size() - 2f64.sqrt() / 4.0).abs() < 1e-15);
        let r = m1.refine_uniform();
        assert!((r.mesh_size() - m1.mesh_size() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn refinement_multiplies_triangles_and_keeps_shape() {
        let m = dirichlet_square(2);
        let r = m.refine_uniform();
        assert_eq!(r.triangles.len(), 32);
        assert_eq!(r.level, 1);
        assert!((r.shape_regularity_ratio() - m.shape_regularity_ratio()).abs() < 1e-12);
        assert!(r.verify_consistency().is_empty());
        // tags inherited
        let g3_before = m.faces.iter().filter(|f| f.kind == FaceKind::Gamma3).count();
        let g3_after = r.faces.iter().filter(|f| f.kind == FaceKind::Gamma3).count();
        assert_eq!(g3_after, 2 * g3_before);
    }

    #[test]
    fn geometry_invariants() {
        let m = dirichlet_square(3);
        assert!((m.total_area() - 1.0).abs() < 1e-12);
        assert!((m.boundary_perimeter() - 4.0).abs() < 1e-12);
        // two-sided normals agree: recompute outward normal from the neighbor
        for f in &m.faces {
            if let Some(nb) = f.neighbor {
                let pa = m.vertices[f.vertices[0]];
                let pb = m.vertices[f.vertices[1]];
                let d = sub(pb, pa);
                let mut n = [d[1] / f.length, -d[0] / f.length];
                let tri = m.triangles[nb];
                let c = [
                    (m.vertices[tri[0]][0] + m.vertices[tri[1]][0] + m.vertices[tri[2]][0]) / 3.0,
                    (m.vertices[tri[0]][1] + m.vertices[tri[1]][1] + m.vertices[tri[2]][1]) / 3.0,
                ];
                if geom::dot(n, sub(f.midpoint(&m), c)) < 0.0 {
                    n = [-n[0], -n[1]];
                }
                assert!((n[0] + f.normal[0]).abs() < 1e-14);
                assert!((n[1] + f.normal[1]).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn verify_consistency_flags_duplicated_triangle() {
        let m = dirichlet_square(2);
        let mut tris = m.triangles.clone();
        tris.push(tris[0]);
        let bad = Mesh::from_raw(m.vertices.clone(), tris, &[]);
        let violations = bad.verify_consistency();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::FaceMultiplicity { count, .. } if *count > 2)));
    }

    #[test]
    fn verify_consistency_flags_untagged_boundary() {
        let vertices = vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
        let triangles = vec![[0, 1, 2]];
        // tag only two of the three boundary edges
        let tags = vec![([0usize, 1usize], FaceKind::Gamma3), ([1, 2], FaceKind::Gamma3)];
        let m = Mesh::from_raw(vertices, triangles, &tags);
        let violations = m.verify_consistency();
        assert!(violations.iter().any(|v| matches!(v, Violation::TagGap { .. })));
    }

    #[test]
    fn valid_mesh_has_no_violations() {
        assert!(dirichlet_square(2).verify_consistency().is_empty());
    }

    #[test]
    fn classify_gamma2_faces() {
        let layout = SideLayout {
            left: CoarseTag::Gamma2,
            right: CoarseTag::Gamma2,
            bottom: CoarseTag::Gamma2,
            top: CoarseTag::Gamma2,
        };
        let m = generate_unit_square(2, layout).unwrap();

        // alpha == nu.c on the whole boundary -> all Gamma21
        let p = problem::test_problem_with(
            |x| geom::dot(x_normal_field(x), [1.0, 0.5]),
            [1.0, 0.5],
        );
        let (c, mixed) = m.classify_boundary(&p, 1e-12);
        assert!(mixed.is_empty());
        assert!(c
            .faces
            .iter()
            .filter(|f| f.neighbor.is_none())
            .all(|f| f.kind == FaceKind::Gamma21));

        // alpha == nu.c + 1 -> all Gamma22
        let p2 = problem::test_problem_with(
            |x| geom::dot(x_normal_field(x), [1.0, 0.5]) + 1.0,
            [1.0, 0.5],
        );
        let (c2, _) = m.classify_boundary(&p2, 1e-12);
        assert!(c2
            .faces
            .iter()
            .filter(|f| f.neighbor.is_none())
            .all(|f| f.kind == FaceKind::Gamma22));

        // c = 0, alpha = 0 -> all Gamma21
        let p3 = problem::test_problem_with(|_| 0.0, [0.0, 0.0]);
        let (c3, _) = m.classify_boundary(&p3, 1e-12);
        assert!(c3
            .faces
            .iter()
            .filter(|f| f.neighbor.is_none())
            .all(|f| f.kind == FaceKind::Gamma21));
    }

    // outward normal of the unit square at boundary point x (corners resolved
    // arbitrarily; only used on face midpoints here)
    fn x_normal_field(x: Vec2) -> Vec2 {
        if x[0] <= 1e-12 {
            [-1.0, 0.0]
        } else if x[0] >= 1.0 - 1e-12 {
            [1.0, 0.0]
        } else if x[1] <= 1e-12 {
            [0.0, -1.0]
        } else {
            [0.0, 1.0]
        }
    }

    #[test]
    fn ascii_roundtrip() {
        let m = dirichlet_square(2);
        let dir = std::env::temp_dir().join("dcrfem_mesh_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("m.txt");
        write_mesh(&m, &path).unwrap();
        let back = read_mesh(&path).unwrap();
        assert_eq!(back.triangles.len(), m.triangles.len());
        assert_eq!(back.vertices.len(), m.vertices.len());
        assert!(back.verify_consistency().is_empty());
        let (i1, _, _, g3, _) = back.face_counts();
        assert_eq!(i1, 8);
        assert_eq!(g3, 8);
    }
}
