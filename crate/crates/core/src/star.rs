//! Multiplicative structure on [`GenDist`]: the Hörmander product for
//! disjoint singular supports, the translation-limit product `★`, its
//! variants, and the commutator bracket.

use std::fmt;
use std::str::FromStr;

use crate::dist::{align, smooth_times_atom, AtomExpansion, DeltaAtom, GenDist, PiecewiseSmooth, Side};
use crate::error::{Error, Result};
use crate::expr::SmoothExpr;
use crate::rational::{rat, ComplexRational};

/// Product variants: `★` and the four related products obtained from other
/// translation limits or by symmetrizing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum VariantTag {
    #[default]
    Star,
    Star2,
    Star3,
    Star4,
    Star5,
}

impl VariantTag {
    pub const ALL: [VariantTag; 5] =
        [VariantTag::Star, VariantTag::Star2, VariantTag::Star3, VariantTag::Star4, VariantTag::Star5];

    pub fn name(self) -> &'static str {
        match self {
            VariantTag::Star => "star",
            VariantTag::Star2 => "star2",
            VariantTag::Star3 => "star3",
            VariantTag::Star4 => "star4",
            VariantTag::Star5 => "star5",
        }
    }
}

impl fmt::Display for VariantTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VariantTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VariantTag::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse { position: 0, message: format!("unknown product variant `{s}`") })
    }
}

/// `fg` on the union grid plus atoms of each factor multiplied into a
/// one-sided piece of the other.
///
/// `f_atoms_see` selects which piece of `G` multiplies `F`'s atoms at each
/// breakpoint, and `g_atoms_see` which piece of `F` multiplies `G`'s atoms.
/// The limit `F·G(x ± ε)` as `ε → 0⁺` is exactly such a choice: shifting `G`
/// left puts its atoms just left of `F`'s, so `F`'s atoms meet `G`'s right
/// piece and `G`'s atoms meet `F`'s left piece.
fn sided_product(f: &GenDist, g: &GenDist, f_atoms_see: Side, g_atoms_see: Side) -> Result<GenDist> {
    let (fa, ga) = align(f, g);
    let pieces = fa.pieces().iter().zip(ga.pieces()).map(|(p, q)| p * q).collect();
    let regular = PiecewiseSmooth::new(fa.breakpoints().to_vec(), pieces)?;

    let mut atoms = AtomExpansion::default();
    expand_against(&mut atoms, fa.atoms(), fa.inexact_atoms(), ga.regular(), f_atoms_see)?;
    expand_against(&mut atoms, ga.atoms(), ga.inexact_atoms(), fa.regular(), g_atoms_see)?;
    Ok(GenDist::from_parts(regular, atoms.exact, atoms.inexact))
}

fn expand_against(
    out: &mut AtomExpansion,
    atoms: &[DeltaAtom],
    inexact: &[crate::dist::InexactAtom],
    other: &PiecewiseSmooth,
    side: Side,
) -> Result<()> {
    for a in atoms {
        out.extend(smooth_times_atom(other.piece_at(&a.location, side), a)?);
    }
    for a in inexact {
        let piece = other.piece_at(&a.location, side);
        out.extend(crate::dist::expand_inexact(piece, a)?);
    }
    Ok(())
}

/// `F ★ G = lim_{ε→0⁺} F · G(x + ε)`.
pub fn star(f: &GenDist, g: &GenDist) -> Result<GenDist> {
    sided_product(f, g, Side::Right, Side::Left)
}

/// The variant products. `Star2` (`lim F·G(x − ε)`) and `Star3`
/// (`lim F(x + ε)·G`) both pair `F`'s atoms with `G`'s left piece and equal
/// `G ★ F`; `Star4` (`lim F(x − ε)·G`) equals `F ★ G`; `Star5` is the
/// symmetrized average.
pub fn star_variant(f: &GenDist, g: &GenDist, tag: VariantTag) -> Result<GenDist> {
    match tag {
        VariantTag::Star | VariantTag::Star4 => sided_product(f, g, Side::Right, Side::Left),
        VariantTag::Star2 | VariantTag::Star3 => sided_product(f, g, Side::Left, Side::Right),
        VariantTag::Star5 => {
            let sum = &star(f, g)? + &star(g, f)?;
            Ok(sum.scale(&ComplexRational::real(rat(1, 2))))
        }
    }
}

/// Product of two distributions whose singular supports are disjoint.
///
/// Each atom of one factor is multiplied by the piece of the other factor
/// whose open interval contains the atom, which is smooth there.
pub fn hormander(f: &GenDist, g: &GenDist) -> Result<GenDist> {
    let f = f.clone().normalize();
    let g = g.clone().normalize();
    let sf = f.singular_support();
    let sg = g.singular_support();
    if let Some(w) = sf.iter().find(|w| sg.binary_search(w).is_ok()) {
        return Err(Error::Overlap(w.to_string()));
    }

    let (fa, ga) = align(&f, &g);
    let pieces: Vec<SmoothExpr> = fa.pieces().iter().zip(ga.pieces()).map(|(p, q)| p * q).collect();
    let regular = PiecewiseSmooth::new(fa.breakpoints().to_vec(), pieces)?;

    let mut atoms = AtomExpansion::default();
    for (own, other) in [(&f, &g), (&g, &f)] {
        for a in own.atoms() {
            atoms.extend(smooth_times_atom(containing_piece(other, &a.location), a)?);
        }
        for a in own.inexact_atoms() {
            atoms.extend(crate::dist::expand_inexact(containing_piece(other, &a.location), a)?);
        }
    }
    Ok(GenDist::from_parts(regular, atoms.exact, atoms.inexact))
}

// After normalization a breakpoint of `other` at `w` would be in its singular
// support unless the adjacent pieces are provably equal, so either side works.
fn containing_piece<'a>(other: &'a GenDist, w: &crate::rational::Rational) -> &'a SmoothExpr {
    other.regular().piece_at(w, Side::Left)
}

/// `[F, G] = F ★ G − G ★ F`.
pub fn bracket(f: &GenDist, g: &GenDist) -> Result<GenDist> {
    Ok(&star(f, g)? - &star(g, f)?)
}

/// The bracket built directly from jumps: at each breakpoint `x_k`,
/// `(g_k − g_{k−1})·Δ⁽ᶠ⁾ + (f_{k−1} − f_k)·Δ⁽ᴳ⁾`.
pub fn bracket_closed_form(f: &GenDist, g: &GenDist) -> Result<GenDist> {
    let (fa, ga) = align(f, g);
    let mut atoms = AtomExpansion::default();
    for (k, w) in fa.breakpoints().iter().enumerate() {
        let g_jump = &ga.pieces()[k + 1] - &ga.pieces()[k];
        let f_jump = &fa.pieces()[k] - &fa.pieces()[k + 1];
        for a in fa.atoms_at(w) {
            atoms.extend(smooth_times_atom(&g_jump, a)?);
        }
        for a in fa.inexact_atoms_at(w) {
            atoms.extend(crate::dist::expand_inexact(&g_jump, a)?);
        }
        for a in ga.atoms_at(w) {
            atoms.extend(smooth_times_atom(&f_jump, a)?);
        }
        for a in ga.inexact_atoms_at(w) {
            atoms.extend(crate::dist::expand_inexact(&f_jump, a)?);
        }
    }
    Ok(GenDist::from_parts(PiecewiseSmooth::smooth(SmoothExpr::zero()), atoms.exact, atoms.inexact))
}
