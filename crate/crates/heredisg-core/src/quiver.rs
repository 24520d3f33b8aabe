//! Finite acyclic quivers and their combinatorics: path enumeration, the
//! Euler form, and Dynkin/Euclidean recognition via the Tits form.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver without directed cycles, so its path algebra is a
/// finite-dimensional hereditary algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertex_names: Vec<String>,
    arrows: Vec<Arrow>,
}

/// A path, stored as the arrow indices traversed in order from source to
/// target. The empty path is the lazy path `e_v` at a vertex.
pub type Path = Vec<usize>;

impl Quiver {
    pub fn new(vertex_names: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        for (i, n) in vertex_names.iter().enumerate() {
            if vertex_names[..i].contains(n) {
                return Err(Error::DuplicateName(n.clone()));
            }
        }
        for (i, a) in arrows.iter().enumerate() {
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::DuplicateName(a.name.clone()));
            }
            if a.source >= vertex_names.len() || a.target >= vertex_names.len() {
                return Err(Error::UnknownName(a.name.clone()));
            }
        }
        let q = Quiver {
            vertex_names,
            arrows,
        };
        if q.has_cycle() {
            return Err(Error::CyclicQuiver);
        }
        Ok(q)
    }

    /// Parses the line-oriented quiver file format:
    ///
    /// ```text
    /// vertices N
    /// arrow <name> <source> <target>
    /// ```
    ///
    /// Vertices are named `1..N`; `#` starts a comment; blank lines are
    /// ignored; LF and CRLF both accepted.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertex_names: Option<Vec<String>> = None;
        let mut arrows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let err = |msg: &str| Error::Parse {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            match toks[0] {
                "vertices" => {
                    if vertex_names.is_some() {
                        return Err(err("duplicate `vertices` line"));
                    }
                    if toks.len() != 2 {
                        return Err(err("expected `vertices N`"));
                    }
                    let n: usize = toks[1].parse().map_err(|_| err("bad vertex count"))?;
                    vertex_names = Some((1..=n).map(|i| i.to_string()).collect());
                }
                "arrow" => {
                    let names = vertex_names
                        .as_ref()
                        .ok_or_else(|| err("`arrow` before `vertices`"))?;
                    if toks.len() != 4 {
                        return Err(err("expected `arrow <name> <source> <target>`"));
                    }
                    let find = |t: &str| {
                        names
                            .iter()
                            .position(|n| n == t)
                            .ok_or_else(|| Error::UnknownName(t.to_string()))
                    };
                    arrows.push(Arrow {
                        name: toks[1].to_string(),
                        source: find(toks[2])?,
                        target: find(toks[3])?,
                    });
                }
                other => return Err(err(&format!("unknown directive `{other}`"))),
            }
        }
        let vertex_names = vertex_names.ok_or(Error::Parse {
            line: 0,
            msg: "missing `vertices` line".to_string(),
        })?;
        Quiver::new(vertex_names, arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertex_names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    fn has_cycle(&self) -> bool {
        // Kahn's algorithm on the vertex digraph.
        let n = self.vertex_count();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for a in &self.arrows {
                if a.source == v {
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        queue.push(a.target);
                    }
                }
            }
        }
        seen != n
    }

    /// Same vertices, every arrow reversed. Applying it twice gives back a
    /// quiver structurally equal to the original.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertex_names: self.vertex_names.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// All paths from `from` to `to`, in a fixed depth-first order. The
    /// empty path is included when `from == to`.
    pub fn paths(&self, from: usize, to: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let mut stack: Vec<(usize, Path)> = vec![(from, Vec::new())];
        while let Some((v, p)) = stack.pop() {
            if v == to {
                out.push(p.clone());
            }
            // Acyclic, so no visited bookkeeping is needed.
            for (i, a) in self.arrows.iter().enumerate().rev() {
                if a.source == v {
                    let mut q = p.clone();
                    q.push(i);
                    stack.push((a.target, q));
                }
            }
        }
        out
    }

    pub fn path_count(&self, from: usize, to: usize) -> usize {
        self.paths(from, to).len()
    }

    /// Euler-form matrix `E` with `E[v][w] = delta_vw - #arrows(v -> w)`.
    pub fn euler_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count();
        let mut e = vec![vec![0i64; n]; n];
        for v in 0..n {
            e[v][v] = 1;
        }
        for a in &self.arrows {
            e[a.source][a.target] -= 1;
        }
        e
    }

    /// The Euler form `<d, e> = sum_v d_v e_v - sum_{a: s->t} d_s e_t`.
    pub fn euler_form(&self, d: &[i64], e: &[i64]) -> Result<i64> {
        let n = self.vertex_count();
        if d.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: d.len(),
            });
        }
        if e.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: e.len(),
            });
        }
        let mut acc: i64 = d.iter().zip(e.iter()).map(|(a, b)| a * b).sum();
        for a in &self.arrows {
            acc -= d[a.source] * e[a.target];
        }
        Ok(acc)
    }

    /// Symmetrized Tits-form matrix `E + E^T`.
    fn tits_matrix(&self) -> Vec<Vec<i64>> {
        let e = self.euler_matrix();
        let n = e.len();
        let mut b = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                b[i][j] = e[i][j] + e[j][i];
            }
        }
        b
    }

    /// Whether the underlying graph is Dynkin A/D/E, i.e. the Tits form is
    /// positive definite.
    pub fn is_dynkin(&self) -> bool {
        self.vertex_count() > 0 && intmat::is_positive_definite(&self.tits_matrix())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// For a Euclidean (affine A/D/E) quiver, the primitive positive null
    /// root of the Tits form; `None` otherwise.
    ///
    /// A connected graph whose symmetrized Tits form has a strictly positive
    /// radical vector has Perron-Frobenius eigenvalue exactly 2, which
    /// characterizes the affine diagrams, so no shape tables are needed.
    pub fn euclidean_null_root(&self) -> Option<Vec<i64>> {
        if !self.is_connected() {
            return None;
        }
        let kernel = intmat::kernel(&self.tits_matrix());
        if kernel.len() != 1 {
            return None;
        }
        let mut delta = kernel.into_iter().next().unwrap();
        if delta.iter().all(|&x| x <= 0) {
            for x in &mut delta {
                *x = -*x;
            }
        }
        if delta.iter().all(|&x| x > 0) {
            Some(delta)
        } else {
            None
        }
    }

    /// Defect of a dimension vector on a Euclidean quiver: `<delta, d>`.
    pub fn defect(&self, d: &[i64]) -> Option<i64> {
        let delta = self.euclidean_null_root()?;
        self.euler_form(&delta, d).ok()
    }
}

/// Exact integer/rational linear algebra on tiny matrices, used only for
/// characteristic-independent quiver classification.
mod intmat {
    use alloc::vec;
    use alloc::vec::Vec;

    fn gcd(a: i128, b: i128) -> i128 {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }

    #[derive(Clone, Copy, PartialEq, Eq)]
    struct Frac {
        num: i128,
        den: i128, // > 0
    }

    impl Frac {
        fn new(num: i128, den: i128) -> Self {
            debug_assert!(den != 0);
            let s = if den < 0 { -1 } else { 1 };
            let (num, den) = (num * s, den * s);
            let g = gcd(num, den).max(1);
            Frac {
                num: num / g,
                den: den / g,
            }
        }
        fn from_int(n: i64) -> Self {
            Frac::new(n as i128, 1)
        }
        fn is_zero(self) -> bool {
            self.num == 0
        }
        fn sub(self, o: Frac) -> Frac {
            Frac::new(self.num * o.den - o.num * self.den, self.den * o.den)
        }
        fn mul(self, o: Frac) -> Frac {
            Frac::new(self.num * o.num, self.den * o.den)
        }
        fn div(self, o: Frac) -> Frac {
            Frac::new(self.num * o.den, self.den * o.num)
        }
        fn neg(self) -> Frac {
            Frac::new(-self.num, self.den)
        }
    }

    /// Positive definiteness via Sylvester's criterion with exact
    /// determinants (Bareiss elimination).
    pub fn is_positive_definite(m: &[Vec<i64>]) -> bool {
        let n = m.len();
        (1..=n).all(|k| leading_minor(m, k) > 0)
    }

    fn leading_minor(m: &[Vec<i64>], k: usize) -> i128 {
        let mut a = vec![vec![0i128; k]; k];
        for i in 0..k {
            for j in 0..k {
                a[i][j] = m[i][j] as i128;
            }
        }
        // Bareiss fraction-free elimination.
        let mut prev = 1i128;
        let mut sign = 1i128;
        for col in 0..k {
            if a[col][col] == 0 {
                let Some(sw) = (col + 1..k).find(|&r| a[r][col] != 0) else {
                    return 0;
                };
                a.swap(col, sw);
                sign = -sign;
            }
            for r in col + 1..k {
                for c in col + 1..k {
                    a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
                }
                a[r][col] = 0;
            }
            prev = a[col][col];
        }
        sign * a[k - 1][k - 1]
    }

    /// Basis of the rational kernel, scaled to primitive integer vectors.
    pub fn kernel(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let mut a: Vec<Vec<Frac>> = m
            .iter()
            .map(|row| row.iter().map(|&x| Frac::from_int(x)).collect())
            .collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            if row == rows {
                break;
            }
            if let Some(pr) = (row..rows).find(|&r| !a[r][col].is_zero()) {
                a.swap(row, pr);
                let inv = a[row][col];
                for c in 0..cols {
                    a[row][c] = a[row][c].div(inv);
                }
                for r in 0..rows {
                    if r != row && !a[r][col].is_zero() {
                        let f = a[r][col];
                        for c in 0..cols {
                            let t = a[row][c].mul(f);
                            a[r][c] = a[r][c].sub(t);
                        }
                    }
                }
                pivots.push(col);
                row += 1;
            }
        }
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Frac::from_int(0); cols];
            v[free] = Frac::from_int(1);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = a[r][free].neg();
            }
            // Clear denominators and divide by the gcd.
            let lcm = v
                .iter()
                .fold(1i128, |acc, f| acc / gcd(acc, f.den).max(1) * f.den);
            let ints: Vec<i128> = v.iter().map(|f| f.num * (lcm / f.den)).collect();
            let g = ints.iter().fold(0i128, |acc, &x| gcd(acc, x)).max(1);
            basis.push(ints.iter().map(|&x| (x / g) as i64).collect());
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::parse("vertices 2\narrow a 1 2\n").unwrap()
    }

    fn kronecker() -> Quiver {
        Quiver::parse("vertices 2\narrow a 1 2\narrow b 1 2\n").unwrap()
    }

    #[test]
    fn parse_minimal_a2() {
        let q = a2();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.arrows().len(), 1);
        assert_eq!(q.arrows()[0].source, 0);
        assert_eq!(q.arrows()[0].target, 1);
    }

    #[test]
    fn parse_kronecker() {
        let q = kronecker();
        assert_eq!(q.arrows().len(), 2);
    }

    #[test]
    fn parse_rejects_loop() {
        assert_eq!(
            Quiver::parse("vertices 1\narrow a 1 1\n"),
            Err(Error::CyclicQuiver)
        );
    }

    #[test]
    fn parse_rejects_two_cycle() {
        assert_eq!(
            Quiver::parse("vertices 2\narrow a 1 2\narrow b 2 1\n"),
            Err(Error::CyclicQuiver)
        );
    }

    #[test]
    fn parse_rejects_duplicate_arrow_names() {
        assert!(matches!(
            Quiver::parse("vertices 2\narrow a 1 2\narrow a 1 2\n"),
            Err(Error::DuplicateName(_))
        ));
    }

    #[test]
    fn parse_accepts_comments_and_crlf() {
        let q = Quiver::parse("# header\r\nvertices 2\r\narrow a 1 2 # tail\r\n").unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.arrows().len(), 1);
    }

    #[test]
    fn path_enumeration_a2() {
        let q = a2();
        assert_eq!(q.path_count(0, 0), 1); // e_1
        assert_eq!(q.path_count(0, 1), 1); // a
        assert_eq!(q.path_count(1, 0), 0);
    }

    #[test]
    fn path_enumeration_kronecker() {
        let q = kronecker();
        assert_eq!(q.path_count(0, 1), 2);
    }

    #[test]
    fn euler_form_values() {
        let q = a2();
        assert_eq!(q.euler_form(&[1, 1], &[1, 0]).unwrap(), 1);
        assert_eq!(q.euler_form(&[1, 1], &[0, 0]).unwrap(), 0);
        let k = kronecker();
        assert_eq!(k.euler_form(&[1, 1], &[1, 1]).unwrap(), 0);
        assert!(k.euler_form(&[1], &[1, 1]).is_err());
    }

    #[test]
    fn dynkin_recognition() {
        assert!(a2().is_dynkin());
        let a3 = Quiver::parse("vertices 3\narrow a 1 2\narrow b 2 3\n").unwrap();
        assert!(a3.is_dynkin());
        let d4 = Quiver::parse("vertices 4\narrow a 2 1\narrow b 3 1\narrow c 4 1\n").unwrap();
        assert!(d4.is_dynkin());
        assert!(!kronecker().is_dynkin());
        // Affine A_2: an oriented 3-cycle broken into an acyclic orientation.
        let a2t = Quiver::parse("vertices 3\narrow a 1 2\narrow b 1 3\narrow c 2 3\n").unwrap();
        assert!(!a2t.is_dynkin());
    }

    #[test]
    fn kronecker_null_root_and_defect() {
        let k = kronecker();
        assert_eq!(k.euclidean_null_root(), Some(vec![1, 1]));
        assert_eq!(k.defect(&[1, 1]), Some(0));
        // preprojective P(1) has negative defect
        assert_eq!(k.defect(&[1, 2]), Some(-1));
        // preinjective I(2) has positive defect
        assert_eq!(k.defect(&[2, 1]), Some(1));
    }

    #[test]
    fn dynkin_quivers_have_no_null_root() {
        assert_eq!(a2().euclidean_null_root(), None);
    }

    #[test]
    fn wild_quiver_is_neither() {
        // Three parallel arrows: Tits form indefinite with trivial radical.
        let w =
            Quiver::parse("vertices 2\narrow a 1 2\narrow b 1 2\narrow c 1 2\n").unwrap();
        assert!(!w.is_dynkin());
        assert_eq!(w.euclidean_null_root(), None);
    }

    #[test]
    fn affine_d4_null_root() {
        // Central vertex 1 with four outer vertices.
        let d4t = Quiver::parse(
            "vertices 5\narrow a 2 1\narrow b 3 1\narrow c 4 1\narrow d 5 1\n",
        )
        .unwrap();
        assert!(!d4t.is_dynkin());
        assert_eq!(d4t.euclidean_null_root(), Some(vec![2, 1, 1, 1, 1]));
    }

    #[test]
    fn opposite_is_involutive() {
        let k = kronecker();
        assert_eq!(k.opposite().opposite(), k);
        assert_eq!(k.opposite().arrows()[0].source, 1);
    }
}
