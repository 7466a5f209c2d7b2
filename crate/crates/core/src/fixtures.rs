//! Small named categories shared by tests, the oracle cross-checks and the CLI.

use crate::fincat::{validate_category, CategoryDescription, FinDaggerCategory, MorphismDecl};

/// Builds a category from its non-identity composites; composites with an
/// identity are filled in automatically.
fn table(
    objects: &[&str],
    morphisms: &[(&str, &str, &str)],
    identities: &[(&str, &str)],
    composites: &[(&str, &str, &str)],
    dagger: &[(&str, &str)],
) -> FinDaggerCategory {
    let mut desc = CategoryDescription {
        objects: objects.iter().map(|s| s.to_string()).collect(),
        morphisms: morphisms
            .iter()
            .map(|&(id, src, tgt)| MorphismDecl { id: id.into(), src: src.into(), tgt: tgt.into() })
            .collect(),
        identities: identities.iter().map(|&(o, m)| (o.into(), m.into())).collect(),
        composition: composites.iter().map(|&(g, f, gf)| [g.into(), f.into(), gf.into()]).collect(),
        dagger: dagger.iter().map(|&(a, b)| (a.into(), b.into())).collect(),
    };
    let id_of = |o: &str| identities.iter().find(|(x, _)| *x == o).unwrap().1;
    for &(f, src, tgt) in morphisms {
        desc.composition.push([id_of(tgt).into(), f.into(), f.into()]);
        desc.composition.push([f.into(), id_of(src).into(), f.into()]);
    }
    validate_category(&desc).expect("fixture tables are valid")
}

/// One object, one morphism.
pub fn one() -> FinDaggerCategory {
    table(&["*"], &[("1", "*", "*")], &[("*", "1")], &[], &[("1", "1")])
}

/// The group of order two, `s∘s = 1`, `s† = s`.
pub fn z2() -> FinDaggerCategory {
    table(&["*"], &[("1", "*", "*"), ("s", "*", "*")], &[("*", "1")], &[("s", "s", "1")], &[("1", "1"), ("s", "s")])
}

/// A self-adjoint idempotent, `p∘p = p`, `p† = p`.
pub fn p2() -> FinDaggerCategory {
    table(&["*"], &[("1", "*", "*"), ("p", "*", "*")], &[("*", "1")], &[("p", "p", "p")], &[("1", "1"), ("p", "p")])
}

/// Two objects joined by a unitary `u: a → b` with dagger `ud`.
pub fn unit_iso() -> FinDaggerCategory {
    table(
        &["a", "b"],
        &[("1a", "a", "a"), ("1b", "b", "b"), ("u", "a", "b"), ("ud", "b", "a")],
        &[("a", "1a"), ("b", "1b")],
        &[("ud", "u", "1a"), ("u", "ud", "1b")],
        &[("1a", "1a"), ("1b", "1b"), ("u", "ud"), ("ud", "u")],
    )
}

/// Identifier of the relation on `{0, 1}` with the given membership bits,
/// read in the order (0,0), (0,1), (1,0), (1,1).
pub fn rel2_id(bits: u8) -> String {
    (0..4).map(|i| if bits & (8 >> i) != 0 { '1' } else { '0' }).fold("r".to_string(), |mut s, c| {
        s.push(c);
        s
    })
}

fn rel_member(bits: u8, i: usize, j: usize) -> bool {
    bits & (8 >> (2 * i + j)) != 0
}

fn rel_from(pred: impl Fn(usize, usize) -> bool) -> u8 {
    let mut bits = 0;
    for i in 0..2 {
        for j in 0..2 {
            if pred(i, j) {
                bits |= 8 >> (2 * i + j);
            }
        }
    }
    bits
}

/// All sixteen relations on a two-element set, relational composition,
/// converse as dagger.
pub fn rel2() -> FinDaggerCategory {
    let mut desc = CategoryDescription { objects: vec!["*".into()], ..Default::default() };
    for r in 0..16u8 {
        desc.morphisms.push(MorphismDecl { id: rel2_id(r), src: "*".into(), tgt: "*".into() });
        let conv = rel_from(|i, j| rel_member(r, j, i));
        desc.dagger.insert(rel2_id(r), rel2_id(conv));
        for s in 0..16u8 {
            let sr = rel_from(|i, k| (0..2).any(|j| rel_member(r, i, j) && rel_member(s, j, k)));
            desc.composition.push([rel2_id(s), rel2_id(r), rel2_id(sr)]);
        }
    }
    desc.identities.insert("*".into(), rel2_id(0b1001));
    validate_category(&desc).expect("relations form a dagger category")
}

/// Object `0` split off `X` by an isometry `z: 0 → X`; `z∘zd = e` is a
/// proper self-adjoint idempotent on `X`.
pub fn zero_x() -> FinDaggerCategory {
    table(
        &["0", "X"],
        &[("1_0", "0", "0"), ("1_X", "X", "X"), ("e", "X", "X"), ("z", "0", "X"), ("zd", "X", "0")],
        &[("0", "1_0"), ("X", "1_X")],
        &[("zd", "z", "1_0"), ("z", "zd", "e"), ("e", "z", "z"), ("zd", "e", "zd"), ("e", "e", "e")],
        &[("1_0", "1_0"), ("1_X", "1_X"), ("e", "e"), ("z", "zd"), ("zd", "z")],
    )
}

/// The shared corpus, in a fixed order.
pub fn all_categories() -> Vec<(&'static str, FinDaggerCategory)> {
    vec![("ONE", one()), ("Z2", z2()), ("P2", p2()), ("UNIT_ISO", unit_iso()), ("REL2", rel2())]
}

pub fn by_name(name: &str) -> Option<FinDaggerCategory> {
    match name {
        "ONE" => Some(one()),
        "Z2" => Some(z2()),
        "P2" => Some(p2()),
        "UNIT_ISO" => Some(unit_iso()),
        "REL2" => Some(rel2()),
        "ZERO_X" => Some(zero_x()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rel2_identity_and_converse() {
        let c = rel2();
        let id = c.identity(c.object("*").unwrap());
        assert_eq!(c.mor_id(id), "r1001");
        let r = c.morphism("r0100").unwrap();
        assert_eq!(c.mor_id(c.dagger(r)), "r0010");
        // (0,1) followed by (1,0) is (0,0)
        let back = c.morphism("r0010").unwrap();
        assert_eq!(c.mor_id(c.compose(back, r)), "r1000");
    }

    #[test]
    fn zero_x_is_valid() {
        let c = zero_x();
        assert_eq!(c.num_morphisms(), 5);
        assert!(!c.is_unitary(c.morphism("z").unwrap()));
    }
}
