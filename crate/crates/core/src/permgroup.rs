//! Permutations in cycle notation, finite permutation groups, orbits,
//! Schreier stabilizer generators, and group order via the orbit-stabilizer
//! formula.
//!
//! Points are 1-based. Composition applies left to right: `compose(p, q)`
//! sends i to q(p(i)), matching how cycle products read in a session.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default cap on the number of elements `enumerate` may produce.
pub const ENUMERATION_CAP: usize = 1_000_000;

/// A bijection of {1..n}; `images[i]` is the image of point i+1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (1..=degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img < 1 || img > n || seen[img - 1] {
                return Err(Error::NotABijection(n));
            }
            seen[img - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses a product of cycles, e.g. "(1,2,3)(4,5)" or "()", applied
    /// left to right. Points must lie in 1..=degree and may not repeat
    /// within a single cycle.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let cycles = parse_cycle_list(text, degree)?;
        Ok(Self::from_cycles(&cycles, degree))
    }

    /// The product of the given cycles, applied left to right.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Permutation {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (1..=degree).collect();
            for (k, &point) in cycle.iter().enumerate() {
                images[point - 1] = cycle[(k + 1) % cycle.len()];
            }
            let step = Permutation { images };
            acc = acc.compose(&step).expect("equal degrees by construction");
        }
        acc
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of a 1-based point; panics if the point is out of range.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img == i + 1)
    }

    /// Left-to-right composition: first `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn moved_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &img)| img != i + 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by
    /// smallest point; fixed points suppressed.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if visited[start - 1] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            visited[start - 1] = true;
            let mut point = self.apply(start);
            while point != start {
                visited[point - 1] = true;
                cycle.push(point);
                point = self.apply(point);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let parts: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

fn parse_cycle_list(text: &str, degree: usize) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut chars = text.chars().peekable();
    let mut saw_any = false;
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c != '(' {
            return Err(Error::BadCycle(format!("expected '(' before '{c}'")));
        }
        chars.next();
        saw_any = true;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            while chars.peek().is_some_and(|c| c.is_whitespace()) {
                chars.next();
            }
            match chars.peek() {
                Some(')') => {
                    chars.next();
                    break;
                }
                Some(c) if c.is_ascii_digit() => {
                    let mut digits = String::new();
                    while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                        digits.push(chars.next().unwrap());
                    }
                    let point: usize = digits
                        .parse()
                        .map_err(|_| Error::BadCycle(format!("point '{digits}' too large")))?;
                    if point < 1 || point > degree {
                        return Err(Error::PointOutOfRange { point, degree });
                    }
                    if cycle.contains(&point) {
                        return Err(Error::BadCycle(format!(
                            "point {point} repeats within a cycle"
                        )));
                    }
                    cycle.push(point);
                    while chars.peek().is_some_and(|c| c.is_whitespace()) {
                        chars.next();
                    }
                    match chars.peek() {
                        Some(',') => {
                            chars.next();
                        }
                        Some(')') => {}
                        other => {
                            return Err(Error::BadCycle(format!(
                                "expected ',' or ')' after a point, found {other:?}"
                            )))
                        }
                    }
                }
                other => {
                    return Err(Error::BadCycle(format!(
                        "expected a point or ')', found {other:?}"
                    )))
                }
            }
        }
        if cycle.len() == 1 {
            return Err(Error::BadCycle(
                "a cycle must name at least two points or be empty".into(),
            ));
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    if !saw_any {
        return Err(Error::BadCycle("expected at least one cycle".into()));
    }
    Ok(cycles)
}

/// Maximum moved point over the given cycle strings; at least 1 so that the
/// trivial group acts on one point.
pub fn degree_of_cycle_strings<S: AsRef<str>>(texts: &[S]) -> Result<usize> {
    let mut degree = 1usize;
    for text in texts {
        // parse with an unbounded degree just to find the support
        let cycles = parse_cycle_list(text.as_ref(), usize::MAX)?;
        for cycle in cycles {
            for point in cycle {
                degree = degree.max(point);
            }
        }
    }
    Ok(degree)
}

/// A permutation group given by generators, with memoized element set and
/// order. The caches fill at most once and are safe under concurrent reads.
#[derive(Debug)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    elements_cache: OnceLock<Vec<Permutation>>,
    order_cache: OnceLock<u128>,
}

impl Clone for Group {
    fn clone(&self) -> Self {
        Group {
            degree: self.degree,
            generators: self.generators.clone(),
            elements_cache: OnceLock::new(),
            order_cache: OnceLock::new(),
        }
    }
}

impl Group {
    /// Group with an explicit nonempty generator list, all of one degree.
    pub fn new(generators: Vec<Permutation>) -> Result<Group> {
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => return Err(Error::EmptyGenerators),
        };
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(Group {
            degree,
            generators,
            elements_cache: OnceLock::new(),
            order_cache: OnceLock::new(),
        })
    }

    /// Group from cycle strings; the degree is the maximum moved point.
    pub fn from_cycle_strings<S: AsRef<str>>(texts: &[S]) -> Result<Group> {
        let degree = degree_of_cycle_strings(texts)?;
        let generators = texts
            .iter()
            .map(|t| Permutation::parse_cycles(t.as_ref(), degree))
            .collect::<Result<Vec<_>>>()?;
        Group::new(generators)
    }

    pub fn trivial(degree: usize) -> Group {
        Group {
            degree: degree.max(1),
            generators: vec![Permutation::identity(degree.max(1))],
            elements_cache: OnceLock::new(),
            order_cache: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point < 1 || point > self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(())
    }

    /// Orbit of a point under the generators, sorted ascending.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        self.check_point(point)?;
        let (mut orbit, _) = orbit_transversal(&self.generators, self.degree, point);
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// Schreier generators of the stabilizer of a point, deduplicated, with
    /// identities dropped. Every returned permutation fixes the point.
    pub fn stabilizer_gens(&self, point: usize) -> Result<Vec<Permutation>> {
        self.check_point(point)?;
        Ok(schreier_generators(&self.generators, self.degree, point))
    }

    /// The stabilizer subgroup of a point, generated by its Schreier
    /// generators.
    pub fn stabilizer(&self, point: usize) -> Result<Group> {
        let gens = self.stabilizer_gens(point)?;
        if gens.is_empty() {
            return Ok(Group::trivial(self.degree));
        }
        Group::new(gens)
    }

    /// Group order by recursive orbit-stabilizer over base points 1, 2, ...
    /// (fixed points skipped).
    pub fn order(&self) -> u128 {
        *self
            .order_cache
            .get_or_init(|| order_by_stabilizer_chain(&self.generators, self.degree))
    }

    /// Every group element, by breadth-first closure of the generators under
    /// composition, up to [`ENUMERATION_CAP`].
    pub fn elements(&self) -> Result<&[Permutation]> {
        if let Some(cached) = self.elements_cache.get() {
            return Ok(cached);
        }
        let computed = enumerate_elements(&self.generators, self.degree, ENUMERATION_CAP)?;
        Ok(self.elements_cache.get_or_init(|| computed))
    }
}

fn orbit_transversal(
    generators: &[Permutation],
    degree: usize,
    point: usize,
) -> (Vec<usize>, HashMap<usize, Permutation>) {
    let mut transversal: HashMap<usize, Permutation> = HashMap::new();
    transversal.insert(point, Permutation::identity(degree));
    let mut queue = std::collections::VecDeque::from([point]);
    let mut orbit = vec![point];
    while let Some(current) = queue.pop_front() {
        let reach = transversal[&current].clone();
        for g in generators {
            let next = g.apply(current);
            if !transversal.contains_key(&next) {
                let via = reach.compose(g).expect("same degree");
                transversal.insert(next, via);
                orbit.push(next);
                queue.push_back(next);
            }
        }
    }
    (orbit, transversal)
}

fn schreier_generators(
    generators: &[Permutation],
    degree: usize,
    point: usize,
) -> Vec<Permutation> {
    let (orbit, transversal) = orbit_transversal(generators, degree, point);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut out = Vec::new();
    for &u in &orbit {
        let repr = &transversal[&u];
        for g in generators {
            let target = g.apply(u);
            let back = transversal[&target].inverse();
            let schreier = repr
                .compose(g)
                .and_then(|p| p.compose(&back))
                .expect("same degree");
            debug_assert_eq!(schreier.apply(point), point);
            if !schreier.is_identity() && seen.insert(schreier.clone()) {
                out.push(schreier);
            }
        }
    }
    out
}

fn order_by_stabilizer_chain(generators: &[Permutation], degree: usize) -> u128 {
    let gens: Vec<Permutation> = generators
        .iter()
        .filter(|g| !g.is_identity())
        .cloned()
        .collect();
    if gens.is_empty() {
        return 1;
    }
    // first point moved by some generator
    let base = (1..=degree)
        .find(|&p| gens.iter().any(|g| g.apply(p) != p))
        .expect("a non-identity generator moves a point");
    let (orbit, _) = orbit_transversal(&gens, degree, base);
    let stabilizer = schreier_generators(&gens, degree, base);
    orbit.len() as u128 * order_by_stabilizer_chain(&stabilizer, degree)
}

fn enumerate_elements(
    generators: &[Permutation],
    degree: usize,
    cap: usize,
) -> Result<Vec<Permutation>> {
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut out = vec![identity];
    let mut frontier = 0usize;
    while frontier < out.len() {
        let current = out[frontier].clone();
        frontier += 1;
        for g in generators {
            let next = current.compose(g)?;
            if seen.insert(next.clone()) {
                if out.len() + 1 > cap {
                    return Err(Error::CapExceeded { cap });
                }
                out.push(next);
            }
        }
    }
    Ok(out)
}
