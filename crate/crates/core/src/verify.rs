//! Named property sweeps. Properties are grouped into one suite per library
//! module. Each property runs every parameter up to its own bound (capped
//! by the caller's `max_n`) and stops at the first counterexample.

use std::collections::{BTreeSet, HashMap, HashSet};

use itertools::Itertools;
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::bijection::{
    diagram_to_fc, fc_to_diagram, fc_to_diagram_reference, predicted_positive_arrows,
};
use crate::counting::{self, brute, recurrence, Provenance};
use crate::diagram::{enumerate_diagrams, Diagram};
use crate::fc::{enumerate_fc, Block, Class, FcElement, Permutation};
use crate::lattice::{
    ballot_to_dyck, diagram_to_ballot, dyck_to_ballot, dyck_to_fc, fc_to_ballot, fc_to_dyck,
};
use crate::tl::{
    census, descents_from_diagram, equivalence_key, monomial_product, DeltaPoly, EquivalenceKey,
    TlElement,
};

type Check = Result<usize, String>;

/// A named sweep.
pub struct Property {
    pub name: &'static str,
    pub module: &'static str,
    pub description: &'static str,
    /// Largest rank the suite visits when uncapped.
    pub bound: usize,
    run: fn(usize) -> Check,
}

/// Result of running one suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub name: &'static str,
    pub bound: usize,
    pub checks: usize,
    pub counterexample: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl Property {
    pub fn run(&self, max_n: usize) -> Outcome {
        let bound = self.bound.min(max_n);
        match (self.run)(bound) {
            Ok(checks) => Outcome {
                name: self.name,
                bound,
                checks,
                counterexample: None,
            },
            Err(msg) => Outcome {
                name: self.name,
                bound,
                checks: 0,
                counterexample: Some(msg),
            },
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Module names, in library order.
pub const SUITES: [&str; 6] = [
    "fc_core",
    "counting",
    "diagram",
    "bijection",
    "tl_algebra",
    "lattice",
];

pub fn properties() -> &'static [Property] {
    &PROPERTIES
}

/// Properties selected by a suite name or a single property name.
pub fn select(name: &str) -> Vec<&'static Property> {
    PROPERTIES
        .iter()
        .filter(|p| p.module == name || p.name == name)
        .collect()
}

/// Runs the properties on separate threads; outcomes come back in input order.
pub fn run_all(selected: &[&'static Property], max_n: usize) -> Vec<Outcome> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|p| scope.spawn(move || p.run(max_n)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("property sweep panicked"))
            .collect()
    })
}

static PROPERTIES: [Property; 31] = [
    Property {
        name: "fc-count",
        module: "fc_core",
        description: "|enumerate_fc(n)| = C_{n+1}, no duplicates",
        bound: 10,
        run: fc_count,
    },
    Property {
        name: "fc-dual",
        module: "fc_core",
        description: "duality is a size-reversing involution with l(w) - l(w*) = 2p - n",
        bound: 10,
        run: fc_dual,
    },
    Property {
        name: "fc-shrink",
        module: "fc_core",
        description:
            "shrink maps thick elements bijectively onto non-identity elements of rank n-1",
        bound: 10,
        run: fc_shrink,
    },
    Property {
        name: "fc-descents",
        module: "fc_core",
        description: "descent formulas agree with the permutation oracle",
        bound: 8,
        run: fc_descents,
    },
    Property {
        name: "fc-partition",
        module: "fc_core",
        description: "identity/thick/slim partition and unique slim decomposition g s_i d",
        bound: 9,
        run: fc_partition,
    },
    Property {
        name: "fc-delta",
        module: "fc_core",
        description:
            "Delta is an involution matching w0 w^-1 w0 and reflecting left to right descents",
        bound: 8,
        run: fc_delta,
    },
    Property {
        name: "fc-321",
        module: "fc_core",
        description: "FC elements are exactly the 321-avoiding permutations; length = inversions",
        bound: 7,
        run: fc_321,
    },
    Property {
        name: "count-narayana",
        module: "counting",
        description: "Narayana row sums and symmetry",
        bound: 20,
        run: count_narayana,
    },
    Property {
        name: "count-triangle",
        module: "counting",
        description: "Catalan triangle recurrence and the partition of C_{n+1}",
        bound: 15,
        run: count_triangle,
    },
    Property {
        name: "count-thick-slim",
        module: "counting",
        description: "thick/slim recurrence reproduces Narayana numbers",
        bound: 12,
        run: count_thick_slim,
    },
    Property {
        name: "count-mixed",
        module: "counting",
        description: "S(n,i) = C_i + sum S(n-k-1, i-k) C_k",
        bound: 12,
        run: count_mixed,
    },
    Property {
        name: "count-brute",
        module: "counting",
        description: "every closed formula equals the filtered enumeration",
        bound: 10,
        run: count_brute,
    },
    Property {
        name: "count-binomial",
        module: "counting",
        description: "binomial-sum identity holds exactly",
        bound: 30,
        run: count_binomial,
    },
    Property {
        name: "diagram-count",
        module: "diagram",
        description: "C_{n+1} distinct valid diagrams on n+1 strings",
        bound: 9,
        run: diagram_count,
    },
    Property {
        name: "diagram-identity",
        module: "diagram",
        description: "identity is neutral on both sides with no loops",
        bound: 8,
        run: diagram_identity,
    },
    Property {
        name: "diagram-associativity",
        module: "diagram",
        description: "concatenation is associative with additive loop counts (random triples)",
        bound: 8,
        run: diagram_associativity,
    },
    Property {
        name: "diagram-rows",
        module: "diagram",
        description: "top and bottom rows determine the diagram",
        bound: 8,
        run: diagram_rows,
    },
    Property {
        name: "diagram-monotone",
        module: "diagram",
        description: "top row of D1 and bottom row of D2 survive in D1 * D2",
        bound: 5,
        run: diagram_monotone,
    },
    Property {
        name: "diagram-parity",
        module: "diagram",
        description: "row arrows join opposite parities, through-strings equal parities",
        bound: 9,
        run: diagram_parity,
    },
    Property {
        name: "bij-roundtrip",
        module: "bijection",
        description: "both roundtrips are the identity",
        bound: 9,
        run: bij_roundtrip,
    },
    Property {
        name: "bij-oracle",
        module: "bijection",
        description: "direct drawing equals the generator-product oracle; trace invariants",
        bound: 8,
        run: bij_oracle,
    },
    Property {
        name: "bij-uniqueness",
        module: "bijection",
        description: "exactly one diagram has the index sets of w",
        bound: 6,
        run: bij_uniqueness,
    },
    Property {
        name: "bij-multiplication",
        module: "bijection",
        description: "D(w1) * D(w2) = (D(w3), m) for every monomial product",
        bound: 5,
        run: bij_multiplication,
    },
    Property {
        name: "bij-rotation",
        module: "bijection",
        description: "rotating D(w) by a half turn gives D(Delta(w))",
        bound: 8,
        run: bij_rotation,
    },
    Property {
        name: "tl-relations",
        module: "tl_algebra",
        description: "e_i^2 = delta e_i, e_i e_{i+-1} e_i = e_i, far commutation",
        bound: 10,
        run: tl_relations,
    },
    Property {
        name: "tl-associativity",
        module: "tl_algebra",
        description: "multiply is associative on random monomial triples",
        bound: 6,
        run: tl_associativity,
    },
    Property {
        name: "tl-rewriting",
        module: "tl_algebra",
        description: "monomial products agree with word rewriting",
        bound: 4,
        run: tl_rewriting,
    },
    Property {
        name: "tl-descents",
        module: "tl_algebra",
        description: "diagram reading, block formulas and permutation oracle agree on descents",
        bound: 8,
        run: tl_descents,
    },
    Property {
        name: "tl-census",
        module: "tl_algebra",
        description:
            "class sizes equal completion counts and Catalan gap products; sums are Narayana",
        bound: 7,
        run: tl_census,
    },
    Property {
        name: "lattice-maps",
        module: "lattice",
        description: "path/ballot maps are inverse and FB = DB . FD",
        bound: 9,
        run: lattice_maps,
    },
    Property {
        name: "lattice-diagram-ballot",
        module: "lattice",
        description: "NB is a bijection onto ballots and differs from FB . D^-1 for every n >= 2",
        bound: 8,
        run: lattice_diagram_ballot,
    },
];

fn fc_count(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        let all = enumerate_fc(n);
        let distinct: HashSet<&FcElement> = all.iter().collect();
        ensure!(distinct.len() == all.len(), "duplicate element at n={n}");
        let expected = counting::catalan::<BigUint>(n + 1);
        ensure!(
            BigUint::from(all.len()) == expected,
            "n={n}: {} elements, C_{} = {expected}",
            all.len(),
            n + 1
        );
        checks += 1;
    }
    Ok(checks)
}

fn fc_dual(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        for w in enumerate_fc(n) {
            let d = w.dual();
            ensure!(
                FcElement::new(n, d.blocks().to_vec()).is_ok(),
                "dual of {w} is not standard: {d}"
            );
            ensure!(d.dual() == w, "dual is not an involution at {w}");
            ensure!(d.size() == n - w.size(), "size of dual of {w}");
            let diff = w.length() as isize - d.length() as isize;
            ensure!(
                diff == 2 * w.size() as isize - n as isize,
                "length difference at {w}: {diff}"
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn fc_shrink(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 1..=max_n {
        let mut images = HashSet::new();
        for w in enumerate_fc(n)
            .into_iter()
            .filter(|w| w.classify() == Class::Thick)
        {
            let s = w.shrink().map_err(|e| format!("{w}: {e}"))?;
            ensure!(s.size() == w.size(), "shrink changed size of {w}");
            ensure!(w.length() == s.length() + w.size(), "length shift at {w}");
            ensure!(s.expand() == w, "expand does not invert shrink at {w}");
            ensure!(images.insert(s), "shrink not injective at {w}");
            checks += 1;
        }
        let targets: HashSet<FcElement> = enumerate_fc(n - 1)
            .into_iter()
            .filter(|w| !w.is_identity())
            .collect();
        ensure!(
            images == targets,
            "shrink is not onto the non-identity elements of rank {}",
            n - 1
        );
    }
    Ok(checks)
}

fn fc_descents(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 1..=max_n {
        for w in enumerate_fc(n).into_iter().filter(|w| !w.is_identity()) {
            let perm = w.to_permutation();
            ensure!(
                w.left_descents().unwrap() == perm.left_descents(),
                "left descents of {w}"
            );
            ensure!(
                w.right_descents().unwrap() == perm.right_descents(),
                "right descents of {w}"
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn fc_partition(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 1..=max_n {
        let all = enumerate_fc(n);
        let slim: HashSet<&FcElement> =
            all.iter().filter(|w| w.classify() == Class::Slim).collect();
        let thick = all.iter().filter(|w| w.classify() == Class::Thick).count();
        ensure!(
            1 + thick + slim.len() == all.len(),
            "partition sizes at n={n}"
        );

        // Rebuild every slim element from (g, i, d): g thick (or empty) on
        // the generators above i, d any element on the generators below i.
        let mut rebuilt = HashSet::new();
        for i in 1..=n {
            let mut prefixes = vec![Vec::new()];
            if i < n {
                prefixes.extend(
                    enumerate_fc(n - i)
                        .into_iter()
                        .filter(|g| g.classify() == Class::Thick)
                        .map(|g| {
                            g.blocks()
                                .iter()
                                .map(|b| Block::new(b.start + i, b.end + i))
                                .collect()
                        }),
                );
            }
            let suffixes = if i > 1 {
                enumerate_fc(i - 1)
            } else {
                vec![FcElement::identity(0)]
            };
            for g in &prefixes {
                for d in &suffixes {
                    let mut blocks: Vec<Block> = g.clone();
                    blocks.push(Block::new(i, i));
                    blocks.extend_from_slice(d.blocks());
                    let w = FcElement::new(n, blocks)
                        .map_err(|e| format!("g s_{i} d not standard: {e}"))?;
                    ensure!(
                        w.slim_split().map(|(_, s, _)| s) == Some(i),
                        "split of {w} does not find s_{i}"
                    );
                    ensure!(rebuilt.insert(w.clone()), "{w} rebuilt twice");
                    checks += 1;
                }
            }
        }
        let slim_owned: HashSet<FcElement> = slim.into_iter().cloned().collect();
        ensure!(
            rebuilt == slim_owned,
            "slim decomposition misses elements at n={n}"
        );
    }
    Ok(checks)
}

fn fc_delta(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 1..=max_n {
        for w in enumerate_fc(n) {
            let d = w.delta_involution();
            ensure!(
                FcElement::new(n, d.blocks().to_vec()).is_ok(),
                "Delta({w}) = {d} is not standard"
            );
            ensure!(
                d.delta_involution() == w,
                "Delta is not an involution at {w}"
            );
            let expected = w.to_permutation().inverse().conjugate_by_longest();
            ensure!(
                d.to_permutation() == expected,
                "Delta({w}) disagrees with the permutation oracle"
            );
            if !w.is_identity() {
                let reflected: BTreeSet<usize> = w
                    .left_descents()
                    .unwrap()
                    .iter()
                    .map(|&s| n + 1 - s)
                    .collect();
                ensure!(
                    reflected == d.right_descents().unwrap(),
                    "descents of Delta({w})"
                );
            }
            checks += 1;
        }
    }
    Ok(checks)
}

fn fc_321(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        let mut perms = HashSet::new();
        for w in enumerate_fc(n) {
            let perm = w.to_permutation();
            ensure!(
                perm.avoids_321(),
                "{w} maps to a permutation containing 321"
            );
            ensure!(
                perm.inversions() == w.length(),
                "length of {w} differs from inversion count"
            );
            ensure!(
                perms.insert(perm),
                "two elements share the permutation of {w}"
            );
        }
        for images in (1..=n + 1).permutations(n + 1) {
            let perm = Permutation::new(images).expect("itertools yields permutations");
            ensure!(
                perm.avoids_321() == perms.contains(&perm),
                "321-avoidance mismatch for {:?}",
                perm.images()
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn count_narayana(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n as isize {
        let row: Vec<BigUint> = (0..=n).map(|p| counting::narayana(n, p)).collect();
        let total: BigUint = row.iter().sum();
        ensure!(
            total == counting::catalan::<BigUint>(n as usize + 1),
            "row sum at n={n}"
        );
        for p in 0..=n as usize {
            ensure!(row[p] == row[n as usize - p], "symmetry at ({n},{p})");
            checks += 1;
        }
    }
    Ok(checks)
}

fn count_triangle(max_n: usize) -> Check {
    let mut checks = 0;
    let table = recurrence::triangle_start_table::<BigUint>(max_n);
    for (n, row) in table.iter().enumerate().skip(1) {
        let mut total = BigUint::from(0u32);
        for (i, expected) in row.iter().enumerate() {
            let value = counting::triangle_start::<BigUint>(n, i);
            if i >= 1 {
                let previous = counting::triangle_start::<BigUint>(n, i - 1);
                let above = counting::triangle_start::<BigUint>(n - 1, i);
                ensure!(
                    value == previous + above,
                    "S({n},{i}) != S({n},{}) + S({},{i})",
                    i - 1,
                    n - 1
                );
            }
            ensure!(
                value == *expected,
                "S({n},{i}) differs from the recurrence table"
            );
            if i >= 1 {
                ensure!(
                    counting::triangle_end::<BigUint>(n, i)
                        == counting::triangle_start::<BigUint>(n, n + 1 - i),
                    "end/start symmetry at ({n},{i})"
                );
            }
            total += value;
            checks += 1;
        }
        ensure!(
            total == counting::catalan::<BigUint>(n + 1),
            "sum of S({n},i) is not C_{}",
            n + 1
        );
    }
    Ok(checks)
}

fn count_thick_slim(max_n: usize) -> Check {
    let rows = recurrence::narayana_thick_slim_table::<BigUint>(max_n);
    let mut checks = 0;
    for (n, row) in rows.iter().enumerate() {
        for (p, value) in row.iter().enumerate() {
            ensure!(
                *value == counting::narayana::<BigUint>(n as isize, p as isize),
                "N({n},{p}) = {value} from the recurrence"
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn count_mixed(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 1..=max_n {
        for i in 1..=n {
            let lhs = counting::triangle_start::<BigUint>(n, i);
            let rhs = recurrence::triangle_start_mixed::<BigUint>(n, i);
            ensure!(
                lhs == rhs,
                "mixed recurrence fails at ({n},{i}): {lhs} vs {rhs}"
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn count_brute(max_n: usize) -> Check {
    let mut checks = 0;
    let eq = |formula: BigUint, counted: usize, what: String| -> Result<(), String> {
        if formula == BigUint::from(counted) {
            Ok(())
        } else {
            Err(format!("{what}: formula {formula}, enumeration {counted}"))
        }
    };
    for n in 0..=max_n {
        let all = enumerate_fc(n);
        for p in 0..=n {
            eq(
                counting::narayana(n as isize, p as isize),
                brute::size(&all, p),
                format!("narayana({n},{p})"),
            )?;
            checks += 1;
        }
        for i in 0..=n {
            eq(
                counting::triangle_start(n, i),
                brute::start(&all, i),
                format!("triangle_start({n},{i})"),
            )?;
            checks += 1;
        }
        for j in 1..=n {
            eq(
                counting::triangle_end(n, j),
                brute::end(&all, j),
                format!("triangle_end({n},{j})"),
            )?;
            checks += 1;
        }
        for (a, b) in (1..=n).flat_map(|a| (a..=n).map(move |b| (a, b))) {
            eq(
                counting::count_first_block(n, a, b),
                brute::first_block(&all, a, b),
                format!("count_first_block({n},{a},{b})"),
            )?;
            eq(
                counting::count_last_block(n, a, b),
                brute::last_block(&all, a, b),
                format!("count_last_block({n},{a},{b})"),
            )?;
            checks += 2;
        }
        for (i, p) in (0..=n).flat_map(|i| (0..=n).map(move |p| (i, p))) {
            eq(
                counting::count_start_size(n, i, p),
                brute::start_size(&all, i, p),
                format!("count_start_size({n},{i},{p})"),
            )?;
            checks += 1;
        }
        for (p, j) in (1..=n).flat_map(|p| (1..=n).map(move |j| (p, j))) {
            eq(
                counting::count_size_end(n, p, j),
                brute::size_end(&all, p, j),
                format!("count_size_end({n},{p},{j})"),
            )?;
            checks += 1;
        }
        for (i, j) in (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))) {
            let c = counting::count_start_end::<BigUint>(n, i, j);
            let expected_provenance = if j + 1 >= i {
                Provenance::ClosedForm
            } else {
                Provenance::NoClosedForm
            };
            ensure!(
                c.provenance == expected_provenance,
                "provenance of count_start_end({n},{i},{j})"
            );
            eq(
                c.value,
                brute::start_end(&all, i, j),
                format!("count_start_end({n},{i},{j})"),
            )?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn count_binomial(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        for p in 0..=n {
            ensure!(
                counting::appendix_binomial_identity_check::<BigUint>(n, p),
                "identity fails at ({n},{p})"
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn diagram_count(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        let all = enumerate_diagrams(n + 1);
        ensure!(
            BigUint::from(all.len()) == counting::catalan::<BigUint>(n + 1),
            "{} diagrams on {} strings",
            all.len(),
            n + 1
        );
        let distinct: HashSet<&Diagram> = all.iter().collect();
        ensure!(
            distinct.len() == all.len(),
            "duplicate diagram on {} strings",
            n + 1
        );
        for d in &all {
            ensure!(
                Diagram::new(n + 1, &d.arrows()).as_ref() == Ok(d),
                "enumerated diagram {d} fails validation"
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn diagram_identity(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        let id = Diagram::identity(n + 1);
        for d in enumerate_diagrams(n + 1) {
            ensure!(
                id.concatenate(&d).unwrap() == (d.clone(), 0),
                "identity * {d}"
            );
            ensure!(
                d.concatenate(&id).unwrap() == (d.clone(), 0),
                "{d} * identity"
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn diagram_associativity(max_n: usize) -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    let mut checks = 0;
    let pools: Vec<Vec<Diagram>> = (0..=max_n).map(|n| enumerate_diagrams(n + 1)).collect();
    for _ in 0..10_000 {
        let pool = &pools[rng.gen_range(0..=max_n)];
        let pick = |rng: &mut StdRng| pool[rng.gen_range(0..pool.len())].clone();
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let (ab, m1) = a.concatenate(&b).unwrap();
        let (ab_c, m2) = ab.concatenate(&c).unwrap();
        let (bc, m3) = b.concatenate(&c).unwrap();
        let (a_bc, m4) = a.concatenate(&bc).unwrap();
        ensure!(
            ab_c == a_bc && m1 + m2 == m3 + m4,
            "associativity fails for {a} | {b} | {c}"
        );
        checks += 1;
    }
    Ok(checks)
}

fn diagram_rows(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        for d in enumerate_diagrams(n + 1) {
            let c = d.components();
            ensure!(
                c.top.len() == c.bottom.len(),
                "row arrow counts differ in {d}"
            );
            ensure!(
                Diagram::from_rows(n + 1, &c.top, &c.bottom).as_ref() == Ok(&d),
                "rows do not rebuild {d}"
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn diagram_monotone(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        let all = enumerate_diagrams(n + 1);
        for a in &all {
            let top: BTreeSet<_> = a.components().top.into_iter().collect();
            for b in &all {
                let (ab, _) = a.concatenate(b).unwrap();
                let c = ab.components();
                let ab_top: BTreeSet<_> = c.top.into_iter().collect();
                let ab_bottom: BTreeSet<_> = c.bottom.into_iter().collect();
                ensure!(top.is_subset(&ab_top), "top row of {a} lost in {a} * {b}");
                ensure!(
                    b.components().bottom.iter().all(|x| ab_bottom.contains(x)),
                    "bottom row of {b} lost in {a} * {b}"
                );
                checks += 1;
            }
        }
    }
    Ok(checks)
}

fn diagram_parity(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        for d in enumerate_diagrams(n + 1) {
            for a in d.arrows() {
                let same_parity = a.tail.index % 2 == a.head.index % 2;
                ensure!(same_parity == a.is_through(), "parity of {a} in {d}");
                checks += 1;
            }
        }
    }
    Ok(checks)
}

fn bij_roundtrip(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        for w in enumerate_fc(n) {
            let (d, _) = fc_to_diagram(&w);
            ensure!(
                diagram_to_fc(&d) == w,
                "diagram_to_fc(fc_to_diagram({w})) != {w}"
            );
            ensure!(d.components().size() == w.size(), "size of D({w})");
            checks += 1;
        }
        for d in enumerate_diagrams(n + 1) {
            ensure!(
                fc_to_diagram(&diagram_to_fc(&d)).0 == d,
                "fc_to_diagram(diagram_to_fc({d})) != {d}"
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn bij_oracle(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        for w in enumerate_fc(n) {
            let (d, trace) = fc_to_diagram(&w);
            let reference = fc_to_diagram_reference(&w).map_err(|e| format!("{w}: {e}"))?;
            ensure!(
                d == reference,
                "D({w}) = {d} but the generator product is {reference}"
            );
            let c = d.components();
            ensure!(c.starts == w.starts().collect(), "start set of D({w})");
            ensure!(c.ends == w.ends().collect(), "end set of D({w})");
            ensure!(
                c.positive == predicted_positive_arrows(&w),
                "positive arrows of D({w})"
            );
            let tails: BTreeSet<usize> = c.positive.iter().map(|a| a.tail.index).collect();
            let heads: BTreeSet<usize> = c.positive.iter().map(|a| a.head.index).collect();
            for step in &trace.top {
                let start = w.blocks()[step.r - 1].start;
                ensure!(
                    step.set.is_empty() == (step.r > 1 && tails.contains(&start)),
                    "A({}) of {w}",
                    step.r
                );
                ensure!(
                    step.chosen == step.set.iter().min().copied(),
                    "f_{} of {w}",
                    step.r
                );
            }
            for step in &trace.bottom {
                let head = w.blocks()[step.r - 1].end + 1;
                ensure!(
                    step.set.is_empty() == (step.r < w.size() && heads.contains(&head)),
                    "B({}) of {w}",
                    step.r
                );
                ensure!(
                    step.chosen == step.set.iter().max().copied(),
                    "g_{} of {w}",
                    step.r
                );
            }
            checks += 1;
        }
    }
    Ok(checks)
}

fn bij_uniqueness(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        let diagrams = enumerate_diagrams(n + 1);
        let sets: Vec<_> = diagrams
            .iter()
            .map(|d| {
                let c = d.components();
                (c.starts, c.ends)
            })
            .collect();
        for w in enumerate_fc(n) {
            let key = (
                w.starts().collect::<BTreeSet<_>>(),
                w.ends().collect::<BTreeSet<_>>(),
            );
            let matches = sets.iter().filter(|s| **s == key).count();
            ensure!(
                matches == 1,
                "{matches} diagrams carry the index sets of {w}"
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn bij_multiplication(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        let all = enumerate_fc(n);
        let diagrams: Vec<Diagram> = all.iter().map(|w| fc_to_diagram(w).0).collect();
        for (u, du) in all.iter().zip(&diagrams) {
            for (v, dv) in all.iter().zip(&diagrams) {
                let (w, m) = monomial_product(u, v).map_err(|e| e.to_string())?;
                let (d, loops) = du.concatenate(dv).unwrap();
                ensure!(
                    d == fc_to_diagram(&w).0 && loops == m,
                    "D({u}) * D({v}) != delta^{m} D({w})"
                );
                checks += 1;
            }
        }
    }
    Ok(checks)
}

fn bij_rotation(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        for w in enumerate_fc(n) {
            let rotated = fc_to_diagram(&w).0.flip_vertical().flip_horizontal();
            ensure!(
                rotated == fc_to_diagram(&w.delta_involution()).0,
                "rotation of D({w})"
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn tl_relations(max_n: usize) -> Check {
    type Elem = TlElement<num_bigint::BigInt>;
    let mut checks = 0;
    for n in 1..=max_n {
        let e = |i: usize| Elem::generator(n, i).expect("index in range");
        let delta = |x: Elem| {
            let (w, _) = x
                .terms()
                .next()
                .map(|(w, c)| (w.clone(), c.clone()))
                .expect("monomial");
            Elem::scaled_monomial(DeltaPoly::delta_pow(1), w)
        };
        for i in 1..=n {
            let ei = e(i);
            ensure!(
                ei.multiply(&ei).unwrap() == delta(ei.clone()),
                "e_{i}^2 != delta e_{i} at n={n}"
            );
            checks += 1;
            for j in [i.wrapping_sub(1), i + 1] {
                if (1..=n).contains(&j) {
                    let prod = ei.multiply(&e(j)).unwrap().multiply(&ei).unwrap();
                    ensure!(prod == ei, "e_{i} e_{j} e_{i} != e_{i} at n={n}");
                    checks += 1;
                }
            }
            for j in (1..=n).filter(|&j| j.abs_diff(i) > 1) {
                let ej = e(j);
                ensure!(
                    ei.multiply(&ej).unwrap() == ej.multiply(&ei).unwrap(),
                    "e_{i} e_{j} != e_{j} e_{i} at n={n}"
                );
                checks += 1;
            }
        }
    }
    Ok(checks)
}

fn tl_associativity(max_n: usize) -> Check {
    type Elem = TlElement<num_bigint::BigInt>;
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let pools: Vec<Vec<FcElement>> = (0..=max_n).map(enumerate_fc).collect();
    let mut checks = 0;
    for _ in 0..10_000 {
        let pool = &pools[rng.gen_range(0..=max_n)];
        let mut pick = || Elem::monomial(pool[rng.gen_range(0..pool.len())].clone());
        let (a, b, c) = (pick(), pick(), pick());
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        ensure!(left == right, "({a} {b}) {c} != {a} ({b} {c})");
        checks += 1;
    }
    Ok(checks)
}

fn tl_rewriting(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        let all = enumerate_fc(n);
        let by_perm: HashMap<Permutation, FcElement> = all
            .iter()
            .map(|w| (w.to_permutation(), w.clone()))
            .collect();
        for u in &all {
            for v in &all {
                let word: Vec<usize> = u.word().into_iter().chain(v.word()).collect();
                let (reduced, loops) = rewrite_word(&word);
                let w = word_to_fc(n, &reduced, &by_perm)
                    .ok_or_else(|| format!("rewriting {u} {v} left a non-FC word {reduced:?}"))?;
                let (w2, m) = monomial_product(u, v).unwrap();
                ensure!(
                    (w.clone(), loops) == (w2.clone(), m),
                    "{u} * {v}: rewriting gives delta^{loops} {w}, diagrams give delta^{m} {w2}"
                );
                checks += 1;
            }
        }
    }
    Ok(checks)
}

/// Reduces a word in the TL generators with `e_i e_i -> delta e_i` and
/// `e_i e_{i+-1} e_i -> e_i`, applied modulo commutation of distant
/// generators. Always rewrites the leftmost eligible pair of consecutive
/// equal letters. Returns the reduced word and the power of `delta`.
pub fn rewrite_word(word: &[usize]) -> (Vec<usize>, usize) {
    let mut word = word.to_vec();
    let mut loops = 0;
    'outer: loop {
        for a in 0..word.len() {
            let letter = word[a];
            let Some(b) = (a + 1..word.len()).find(|&b| word[b] == letter) else {
                continue;
            };
            let neighbours: Vec<usize> = (a + 1..b)
                .filter(|&c| word[c].abs_diff(letter) == 1)
                .collect();
            match neighbours.as_slice() {
                [] => {
                    word.remove(b);
                    loops += 1;
                    continue 'outer;
                }
                [c] => {
                    let c = *c;
                    word.remove(b);
                    word.remove(c);
                    continue 'outer;
                }
                _ => {}
            }
        }
        return (word, loops);
    }
}

fn word_to_fc(
    n: usize,
    word: &[usize],
    by_perm: &HashMap<Permutation, FcElement>,
) -> Option<FcElement> {
    let mut images: Vec<usize> = (1..=n + 1).collect();
    for &k in word {
        images.swap(k - 1, k);
    }
    let w = by_perm.get(&Permutation::new(images)?)?;
    (w.length() == word.len()).then(|| w.clone())
}

fn tl_descents(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 1..=max_n {
        for w in enumerate_fc(n).into_iter().filter(|w| !w.is_identity()) {
            let (d, _) = fc_to_diagram(&w);
            let (left, right) = descents_from_diagram(&d);
            let perm = w.to_permutation();
            ensure!(
                left == w.left_descents().unwrap() && left == perm.left_descents(),
                "left descents of {w}"
            );
            ensure!(
                right == w.right_descents().unwrap() && right == perm.right_descents(),
                "right descents of {w}"
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn tl_census(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 1..=max_n {
        let mut completions: HashMap<EquivalenceKey, usize> = HashMap::new();
        for d in enumerate_diagrams(n + 1) {
            *completions.entry(equivalence_key(&d)).or_default() += 1;
        }
        for p in 0..=n {
            let classes = census(n, p);
            let total: usize = classes.iter().map(|c| c.size).sum();
            ensure!(
                BigUint::from(total) == counting::narayana::<BigUint>(n as isize, p as isize),
                "census sum at ({n},{p})"
            );
            for class in &classes {
                let recount = completions.get(&class.key).copied().unwrap_or(0);
                ensure!(
                    class.size == recount,
                    "class {} at ({n},{p}): {} members, {recount} completions",
                    class.key,
                    class.size
                );
                ensure!(
                    class.size == class.key.gap_catalan_product(),
                    "class {} is not a Catalan gap product",
                    class.key
                );
                checks += 1;
            }
        }
    }
    Ok(checks)
}

fn lattice_maps(max_n: usize) -> Check {
    let mut checks = 0;
    for n in 0..=max_n {
        for w in enumerate_fc(n) {
            let path = fc_to_dyck(&w);
            let peaks: Vec<(usize, usize)> =
                w.blocks().iter().rev().map(|b| (b.end, b.start)).collect();
            ensure!(path.peaks() == peaks, "peaks of FD({w})");
            ensure!(dyck_to_fc(&path) == w, "dyck_to_fc(FD({w}))");
            let ballot = dyck_to_ballot(&path);
            ensure!(ballot_to_dyck(&ballot) == path, "BD(DB(FD({w})))");
            ensure!(fc_to_ballot(&w) == ballot, "FB({w}) != DB(FD({w}))");
            checks += 1;
        }
    }
    Ok(checks)
}

fn lattice_diagram_ballot(max_n: usize) -> Check {
    let mut checks = 0;
    let example = FcElement::from_pairs(5, &[(4, 5), (3, 3), (1, 1)]).unwrap();
    ensure!(
        diagram_to_ballot(&fc_to_diagram(&example).0) != fc_to_ballot(&example),
        "NB(D(w)) = FB(w) for {example}"
    );
    for n in 0..=max_n {
        let ballots: HashSet<String> = enumerate_diagrams(n + 1)
            .iter()
            .map(|d| diagram_to_ballot(d).to_string())
            .collect();
        let expected: HashSet<String> = enumerate_fc(n)
            .iter()
            .map(|w| fc_to_ballot(w).to_string())
            .collect();
        ensure!(
            ballots == expected,
            "NB is not a bijection onto ballots of length {}",
            2 * (n + 1)
        );
        if n >= 2 {
            let differs = enumerate_fc(n)
                .iter()
                .any(|w| diagram_to_ballot(&fc_to_diagram(w).0) != fc_to_ballot(w));
            ensure!(differs, "NB . D agrees with FB on all of rank {n}");
        }
        checks += 1;
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let names: HashSet<&str> = properties().iter().map(|p| p.name).collect();
        assert_eq!(names.len(), properties().len());
        assert_eq!(select("bij-oracle").len(), 1);
        assert!(select("nope").is_empty());
        let grouped: usize = SUITES.iter().map(|s| select(s).len()).sum();
        assert_eq!(grouped, properties().len());
    }

    #[test]
    fn rewriting_examples() {
        assert_eq!(rewrite_word(&[1, 1]), (vec![1], 1));
        assert_eq!(rewrite_word(&[1, 2, 1]), (vec![1], 0));
        assert_eq!(rewrite_word(&[1, 3, 1]), (vec![1, 3], 1));
        assert_eq!(rewrite_word(&[2, 1, 3, 2]), (vec![2, 1, 3, 2], 0));
    }

    #[test]
    fn every_suite_passes_small() {
        let all: Vec<_> = properties().iter().collect();
        for outcome in run_all(&all, 3) {
            assert!(
                outcome.passed(),
                "{}: {:?}",
                outcome.name,
                outcome.counterexample
            );
        }
    }
}
