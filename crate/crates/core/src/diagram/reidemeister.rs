//! Reidemeister moves on Gauss codes.

use crate::error::{Error, Result};

use super::gauss::{GaussCode, Pass, Role, Sign, Site};

/// A Reidemeister move together with its site. Insertion positions are
/// indices into a component; the new passes are placed before the pass
/// currently at that index (or appended when it equals the length).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// Adds a kink: two consecutive passes of a new crossing.
    R1Add { at: Site, over_first: bool, sign: Sign },
    /// Removes a crossing whose two passes are consecutive.
    R1Remove { crossing: u32 },
    /// Adds two crossings of opposite sign: strand `over` passes over strand
    /// `under`. With `parallel` false the under strand meets them in reverse
    /// order. `sign` is the sign of the first new crossing.
    R2Add { over: Site, under: Site, parallel: bool, sign: Sign },
    /// Removes a bigon formed by two crossings of opposite sign.
    R2Remove { crossings: (u32, u32) },
    /// Slides a strand across the crossing of the other two.
    R3 { crossings: [u32; 3] },
}

pub fn apply_reidemeister(code: &GaussCode, mv: Move) -> Result<GaussCode> {
    match mv {
        Move::R1Add { at, over_first, sign } => {
            check_insertion(code, at)?;
            let id = code.max_crossing_id() + 1;
            let (first, second) = if over_first { (Role::Over, Role::Under) } else { (Role::Under, Role::Over) };
            insert(code, &mut [(at, 0, vec![Pass::new(id, first, sign), Pass::new(id, second, sign)])])
        }
        Move::R1Remove { crossing } => {
            let o = locate(code, crossing, Role::Over)?;
            let u = locate(code, crossing, Role::Under)?;
            if !adjacent(code, o, u) {
                return Err(illegal(format!("crossing {crossing} is not a kink")));
            }
            remove(code, &[crossing])
        }
        Move::R2Add { over, under, parallel, sign } => {
            check_insertion(code, over)?;
            check_insertion(code, under)?;
            let id = code.max_crossing_id() + 1;
            let (a, b) = (id, id + 1);
            let over_passes = vec![Pass::new(a, Role::Over, sign), Pass::new(b, Role::Over, sign.flip())];
            let mut under_passes = vec![Pass::new(a, Role::Under, sign), Pass::new(b, Role::Under, sign.flip())];
            if !parallel {
                under_passes.reverse();
            }
            insert(code, &mut [(over, 0, over_passes), (under, 1, under_passes)])
        }
        Move::R2Remove { crossings: (a, b) } => {
            if a == b {
                return Err(illegal("R2 needs two distinct crossings".into()));
            }
            let (oa, ob) = (locate(code, a, Role::Over)?, locate(code, b, Role::Over)?);
            let (ua, ub) = (locate(code, a, Role::Under)?, locate(code, b, Role::Under)?);
            if code.pass(oa).sign == code.pass(ob).sign {
                return Err(illegal(format!("crossings {a} and {b} have equal signs")));
            }
            if !adjacent(code, oa, ob) || !adjacent(code, ua, ub) {
                return Err(illegal(format!("crossings {a} and {b} do not bound a bigon")));
            }
            remove(code, &[a, b])
        }
        Move::R3 { crossings } => r3(code, crossings),
    }
}

fn illegal(msg: String) -> Error {
    Error::IllegalMove(msg)
}

fn locate(code: &GaussCode, crossing: u32, role: Role) -> Result<Site> {
    code.locate(crossing, role)
        .ok_or_else(|| illegal(format!("no crossing {crossing}")))
}

fn adjacent(code: &GaussCode, a: Site, b: Site) -> bool {
    code.next_site(a) == b || code.next_site(b) == a
}

fn check_insertion(code: &GaussCode, (c, p): Site) -> Result<()> {
    match code.components().get(c) {
        Some(comp) if p <= comp.len() => Ok(()),
        _ => Err(illegal(format!("no insertion point ({c}, {p})"))),
    }
}

/// Inserts blocks of passes; at a shared position, blocks are laid down in
/// order of their tie-break key.
fn insert(code: &GaussCode, blocks: &mut [(Site, u8, Vec<Pass>)]) -> Result<GaussCode> {
    blocks.sort_by_key(|b| std::cmp::Reverse((b.0, b.1)));
    let mut out = code.clone();
    for ((c, p), _, passes) in blocks.iter() {
        let comp = &mut out.components_mut()[*c];
        comp.splice(*p..*p, passes.iter().copied());
    }
    Ok(out)
}

fn remove(code: &GaussCode, ids: &[u32]) -> Result<GaussCode> {
    let comps: Vec<Vec<Pass>> = code
        .components()
        .iter()
        .map(|comp| comp.iter().copied().filter(|p| !ids.contains(&p.crossing)).collect())
        .collect();
    if comps.iter().any(Vec::is_empty) {
        return Err(illegal("move would leave a crossingless component".into()));
    }
    Ok(GaussCode::from_components_unchecked(comps))
}

/// Three equal-sign crossings `x, y, z` where strand `a` passes `x` then `y`,
/// strand `b` passes `x` then `z` and strand `c` passes `y` then `z`, with `a`
/// on top and `c` at the bottom (or the over/under mirror). The move reverses
/// the order of each of the three adjacent pairs.
fn r3(code: &GaussCode, ids: [u32; 3]) -> Result<GaussCode> {
    if ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2] {
        return Err(illegal("R3 needs three distinct crossings".into()));
    }
    let mut sites = Vec::new();
    for &id in &ids {
        sites.push((locate(code, id, Role::Over)?, locate(code, id, Role::Under)?));
    }
    let sign = code.pass(sites[0].0).sign;
    if sites.iter().any(|s| code.pass(s.0).sign != sign) {
        return Err(illegal("R3 crossings must share a sign".into()));
    }
    let pick = |k: usize, top: bool, mirror: bool| -> Site {
        if top != mirror {
            sites[k].0
        } else {
            sites[k].1
        }
    };
    let follows = |a: Site, b: Site| code.next_site(a) == b;
    for perm in PERMUTATIONS {
        let [x, y, z] = perm;
        for mirror in [false, true] {
            let (tx, ty) = (pick(x, true, mirror), pick(y, true, mirror));
            let (bx, tz) = (pick(x, false, mirror), pick(z, true, mirror));
            let (by, bz) = (pick(y, false, mirror), pick(z, false, mirror));
            let before = follows(tx, ty) && follows(bx, tz) && follows(by, bz);
            let after = follows(ty, tx) && follows(tz, bx) && follows(bz, by);
            if before || after {
                let mut out = code.clone();
                let comps = out.components_mut();
                for (p, q) in [(tx, ty), (bx, tz), (by, bz)] {
                    let (a, b) = (code.pass(p), code.pass(q));
                    comps[p.0][p.1] = b;
                    comps[q.0][q.1] = a;
                }
                return Ok(out);
            }
        }
    }
    Err(illegal(format!("no R3 triangle on crossings {ids:?}")))
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Every removal and R3 site present in `code`, plus all kink and bigon
/// insertions with both sign choices.
pub fn candidate_moves(code: &GaussCode) -> Vec<Move> {
    let mut moves = Vec::new();
    let ids: Vec<u32> = code.crossings().iter().map(|c| c.id).collect();
    let points: Vec<Site> = code
        .components()
        .iter()
        .enumerate()
        .flat_map(|(c, comp)| (0..comp.len()).map(move |p| (c, p)))
        .collect();
    for &at in &points {
        for over_first in [true, false] {
            for sign in [Sign::Positive, Sign::Negative] {
                moves.push(Move::R1Add { at, over_first, sign });
            }
        }
    }
    for &over in &points {
        for &under in &points {
            for parallel in [true, false] {
                for sign in [Sign::Positive, Sign::Negative] {
                    moves.push(Move::R2Add { over, under, parallel, sign });
                }
            }
        }
    }
    for &a in &ids {
        moves.push(Move::R1Remove { crossing: a });
        for &b in &ids {
            if a < b {
                moves.push(Move::R2Remove { crossings: (a, b) });
            }
        }
    }
    for (i, &a) in ids.iter().enumerate() {
        for (j, &b) in ids.iter().enumerate().skip(i + 1) {
            for &c in &ids[j + 1..] {
                moves.push(Move::R3 { crossings: [a, b, c] });
            }
        }
    }
    moves.retain(|&m| apply_reidemeister(code, m).is_ok());
    moves
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> GaussCode {
        s.parse().unwrap()
    }

    #[test]
    fn kink_round_trip() {
        let vt = code("O1+O2+U1+U2+");
        let mv = Move::R1Add { at: (0, 2), over_first: false, sign: Sign::Negative };
        let k = apply_reidemeister(&vt, mv).unwrap();
        assert_eq!(k.to_string(), "O1+O2+U3-O3-U1+U2+");
        assert_eq!(k.crossing_count(), 3);
        assert_eq!(apply_reidemeister(&k, Move::R1Remove { crossing: 3 }).unwrap(), vt);
        assert!(apply_reidemeister(&vt, Move::R1Remove { crossing: 1 }).is_err());
        assert!(apply_reidemeister(&code("O1+U1+"), Move::R1Remove { crossing: 1 }).is_err());
    }

    #[test]
    fn bigon_round_trip() {
        let vt = code("O1+O2+U1+U2+");
        for parallel in [true, false] {
            let mv = Move::R2Add { over: (0, 1), under: (0, 3), parallel, sign: Sign::Positive };
            let b = apply_reidemeister(&vt, mv).unwrap();
            assert_eq!(b.crossing_count(), 4);
            assert_eq!(apply_reidemeister(&b, Move::R2Remove { crossings: (3, 4) }).unwrap(), vt);
        }
    }

    #[test]
    fn r3_on_braid_pattern() {
        let c = code("O1+O2+/U1+O3+/U2+U3+");
        let moved = apply_reidemeister(&c, Move::R3 { crossings: [3, 1, 2] }).unwrap();
        assert_eq!(moved.to_string(), "O2+O1+/O3+U1+/U3+U2+");
        assert_eq!(apply_reidemeister(&moved, Move::R3 { crossings: [1, 2, 3] }).unwrap(), c);
        let mirror = c.mirror().sign_flip();
        assert!(apply_reidemeister(&mirror, Move::R3 { crossings: [1, 2, 3] }).is_ok());
        assert!(apply_reidemeister(&code("O1+O2+U1+U2+"), Move::R3 { crossings: [1, 2, 2] }).is_err());
        assert!(apply_reidemeister(&code("O1+U2+O3+U1+O2+U3+"), Move::R3 { crossings: [1, 2, 3] }).is_err());
    }
}
