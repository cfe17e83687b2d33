//! Built-in permutation realizations of the groups in the published tables,
//! and the plain-text group definition format.
//!
//! A definition file starts with `degree <n>` followed by one generator per
//! line in 1-based disjoint cycle notation, e.g. `(1 2 3 4 5)(6 7)`. Blank
//! lines and `#` comments are ignored.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_ELEMENT_CAP};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub display: &'static str,
    pub claimed_order: usize,
    /// `(order, library id)` as used in the small groups library.
    pub claimed_id: Option<(u32, u32)>,
    pub degree: usize,
    pub generators: &'static [&'static str],
}

impl CatalogEntry {
    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with_cap(DEFAULT_ELEMENT_CAP)
    }

    /// Closes the generators and checks the order against the claimed one.
    pub fn build_with_cap(&self, cap: usize) -> Result<FiniteGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| Permutation::parse_cycles(self.degree, g))
            .collect::<Result<Vec<_>>>()?;
        let group = FiniteGroup::close_with_cap(self.degree, gens, cap)?;
        if group.order() != self.claimed_order {
            return Err(Error::Internal(format!(
                "catalog group {} has order {} but should have order {}",
                self.name,
                group.order(),
                self.claimed_order
            )));
        }
        Ok(group)
    }

    pub fn id_string(&self) -> String {
        match self.claimed_id {
            Some((o, i)) => format!("⟨{o},{i}⟩"),
            None => "-".into(),
        }
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}  order {}  {}  degree {}  {}",
            self.name,
            self.claimed_order,
            self.id_string(),
            self.degree,
            self.display
        )
    }
}

const fn entry(
    name: &'static str,
    aliases: &'static [&'static str],
    display: &'static str,
    claimed_order: usize,
    claimed_id: Option<(u32, u32)>,
    degree: usize,
    generators: &'static [&'static str],
) -> CatalogEntry {
    CatalogEntry {
        name,
        aliases,
        display,
        claimed_order,
        claimed_id,
        degree,
        generators,
    }
}

pub static CATALOG: &[CatalogEntry] = &[
    entry(
        "a5",
        &["psl25"],
        "A5",
        60,
        Some((60, 5)),
        5,
        &["(1 2 3 4 5)", "(1 2)(3 4)"],
    ),
    entry("s4", &[], "S4", 24, Some((24, 12)), 4, &["(1 2 3 4)", "(1 2)"]),
    entry(
        "s4xz2",
        &[],
        "S4 x Z2",
        48,
        Some((48, 48)),
        6,
        &["(1 2 3 4)", "(1 2)", "(5 6)"],
    ),
    entry("s5", &[], "S5", 120, Some((120, 34)), 5, &["(1 2 3 4 5)", "(1 2)"]),
    entry("s6", &[], "S6", 720, Some((720, 763)), 6, &["(1 2 3 4 5 6)", "(1 2)"]),
    entry(
        "a6",
        &["psl29"],
        "A6 = PSL(2,9)",
        360,
        Some((360, 118)),
        6,
        &["(1 2 3 4 5)", "(4 5 6)"],
    ),
    // automorphisms of the Fano plane
    entry(
        "psl27",
        &[],
        "PSL(2,7)",
        168,
        Some((168, 42)),
        7,
        &["(1 2 3 4 5 6 7)", "(1 2)(3 6)"],
    ),
    entry(
        "psl27xz2",
        &[],
        "PSL(2,7) x Z2",
        336,
        Some((336, 209)),
        9,
        &["(1 2 3 4 5 6 7)", "(1 2)(3 6)", "(8 9)"],
    ),
    // x -> x + 1, x -> a x, x -> 1/x on the projective line over F8 = F2[a]/(a^3 + a + 1)
    entry(
        "psl28",
        &[],
        "PSL(2,8)",
        504,
        Some((504, 156)),
        9,
        &["(1 2)(3 4)(5 6)(7 8)", "(2 3 5 4 7 8 6)", "(1 9)(3 6)(4 7)(5 8)"],
    ),
    entry(
        "z5xz5",
        &[],
        "(Z5)^2",
        25,
        Some((25, 2)),
        10,
        &["(1 2 3 4 5)", "(6 7 8 9 10)"],
    ),
    entry(
        "z7xz7",
        &[],
        "(Z7)^2",
        49,
        Some((49, 2)),
        14,
        &["(1 2 3 4 5 6 7)", "(8 9 10 11 12 13 14)"],
    ),
    entry("z3xz3", &[], "(Z3)^2", 9, Some((9, 2)), 6, &["(1 2 3)", "(4 5 6)"]),
    entry(
        "z2^3",
        &["z2xz2xz2"],
        "(Z2)^3",
        8,
        Some((8, 5)),
        6,
        &["(1 2)", "(3 4)", "(5 6)"],
    ),
    entry(
        "z2^4",
        &["z2xz2xz2xz2"],
        "(Z2)^4",
        16,
        Some((16, 14)),
        8,
        &["(1 2)", "(3 4)", "(5 6)", "(7 8)"],
    ),
    entry(
        "d4xz2",
        &[],
        "D4 x Z2",
        16,
        Some((16, 11)),
        6,
        &["(1 2 3 4)", "(1 3)", "(5 6)"],
    ),
    // (Z2)^2 ⋊ Z4 with the generator of Z4 exchanging the two involutions
    entry(
        "g16",
        &[],
        "G(16) = (Z2)^2 ⋊ Z4",
        16,
        Some((16, 3)),
        8,
        &["(1 3)", "(1 2 3 4)(5 6 7 8)"],
    ),
    // (Z2)^2 wr Z2
    entry(
        "g32",
        &[],
        "G(32) = (Z2)^2 wr Z2",
        32,
        Some((32, 27)),
        8,
        &["(1 2)", "(3 4)", "(1 5)(2 6)(3 7)(4 8)"],
    ),
    // a 2-generated subgroup of the Sylow 2-subgroup of S16; both generators
    // and their product have order 4
    entry(
        "g128",
        &[],
        "G(128)",
        128,
        Some((128, 36)),
        16,
        &[
            "(1 11 3 10)(2 12 4 9)(5 15 6 16)(7 14 8 13)",
            "(1 13 3 15)(2 14 4 16)(5 10 7 12)(6 9 8 11)",
        ],
    ),
];

/// Finds a catalog entry by name or alias (case-insensitive).
pub fn lookup(name: &str) -> Option<&'static CatalogEntry> {
    let name = name.trim().to_ascii_lowercase();
    CATALOG
        .iter()
        .find(|e| e.name == name || e.aliases.contains(&name.as_str()))
}

/// Parses the group definition format.
pub fn parse_group_definition(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut degree = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let n = line
                    .strip_prefix("degree")
                    .and_then(|rest| rest.trim().parse::<usize>().ok())
                    .ok_or_else(|| {
                        Error::Input(format!("line {}: expected `degree <n>`, found {line:?}", lineno + 1))
                    })?;
                degree = Some(n);
            }
            Some(n) => gens.push(
                Permutation::parse_cycles(n, line).map_err(|e| Error::Input(format!("line {}: {e}", lineno + 1)))?,
            ),
        }
    }
    let degree = degree.ok_or_else(|| Error::Input("missing `degree <n>` line".into()))?;
    if gens.is_empty() {
        return Err(Error::Input("group definition has no generators".into()));
    }
    Ok((degree, gens))
}

pub fn load_group_file(path: &Path, cap: usize) -> Result<FiniteGroup> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let (degree, gens) = parse_group_definition(&text)?;
    FiniteGroup::close_with_cap(degree, gens, cap)
}

/// Resolves `name` or `@path` to a group and a display name.
pub fn resolve(spec: &str, cap: usize) -> Result<(String, FiniteGroup)> {
    if let Some(path) = spec.strip_prefix('@') {
        let group = load_group_file(Path::new(path), cap)?;
        return Ok((path.to_string(), group));
    }
    let entry = lookup(spec).ok_or_else(|| {
        let names: Vec<&str> = CATALOG.iter().map(|e| e.name).collect();
        Error::Input(format!("unknown group {spec:?}; known groups: {}", names.join(", ")))
    })?;
    Ok((entry.name.to_string(), entry.build_with_cap(cap)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_has_its_claimed_order() {
        for e in CATALOG {
            let g = e.build().unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert_eq!(g.order(), e.claimed_order, "{}", e.name);
            if let Some((o, _)) = e.claimed_id {
                assert_eq!(o as usize, e.claimed_order);
            }
        }
    }

    #[test]
    fn listing_format() {
        let a5 = lookup("a5").unwrap().to_string();
        assert!(a5.contains("a5  order 60  ⟨60,5⟩"), "{a5}");
        let z7 = lookup("Z7xZ7").unwrap().to_string();
        assert!(z7.contains("z7xz7  order 49  ⟨49,2⟩"), "{z7}");
        assert_eq!(lookup("psl29").unwrap().name, "a6");
        assert!(lookup("m11").is_none());
    }

    #[test]
    fn definition_file() {
        let text = "# A5\ndegree 5\n\n(1 2 3 4 5)\n(1 2)(3 4)  # involution\n";
        let (n, gens) = parse_group_definition(text).unwrap();
        assert_eq!(n, 5);
        assert_eq!(gens.len(), 2);
        assert_eq!(FiniteGroup::close(n, gens).unwrap().order(), 60);
        assert!(parse_group_definition("(1 2)\n").is_err());
        assert!(parse_group_definition("degree 3\n").is_err());
        assert!(parse_group_definition("degree 3\n(1 4)\n").is_err());
    }

    #[test]
    fn structural_checks_for_small_two_groups() {
        // G(16): exponent 4, abelianization Z2 x Z4 and centre of order 4
        let g16 = lookup("g16").unwrap().build().unwrap();
        assert_eq!(g16.exponent(), 4);
        let centre = g16
            .ids()
            .filter(|&z| g16.ids().all(|x| g16.mul(z, x) == g16.mul(x, z)))
            .count();
        assert_eq!(centre, 4);
        // G(32) = (Z2)^2 wr Z2 has exponent 4 and a centre of order 4
        let g32 = lookup("g32").unwrap().build().unwrap();
        assert_eq!(g32.exponent(), 4);
        let centre = g32
            .ids()
            .filter(|&z| g32.ids().all(|x| g32.mul(z, x) == g32.mul(x, z)))
            .count();
        assert_eq!(centre, 4);
    }
}
