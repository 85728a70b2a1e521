//! Move scripts for the built-in families.
//!
//! A chain family at parameter `n` is reduced in three parts:
//!
//! 1. an opening that blows down the central `(−1)` vertex (and, when the
//!    first leg is a single `(−2)`, the component it becomes);
//! 2. `n − 1` identical stages, each sliding the next `(−2)` of the chain
//!    leg over the carrier components until its framing is `−1` and blowing
//!    it down, then sliding its successor back;
//! 3. the base reduction, computed once on the `n = 1` member and replayed
//!    under a positional relabelling, since after the stages the link agrees
//!    with the `n = 1` opening state entry for entry.
//!
//! The base reduction is a deterministic greedy search: blow down the
//! first `±1` component, otherwise take the slide that lowers a framing the
//! most, otherwise a pair of slides giving framing `−1`. It ends at the
//! empty link, and the target surgery diagram is recovered by blow-ups.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::link::{plumbing_to_link, FramedLink, Sign};
use super::script::{KirbyMove, KirbyScript};
use crate::family::{family, FamilyId, SurgeryTarget};
use crate::plumbing::brieskorn_plumbing;
use crate::{Error, Result};

const GREEDY_LIMIT: usize = 100_000;

fn apply_all(start: &FramedLink, moves: &[KirbyMove]) -> Result<FramedLink> {
    moves.iter().try_fold(start.clone(), |l, mv| mv.apply(&l))
}

fn greedy_reduction(start: &FramedLink) -> Option<Vec<KirbyMove>> {
    let mut l = start.clone();
    let mut moves = Vec::new();
    while !l.is_empty() {
        if moves.len() > GREEDY_LIMIT {
            return None;
        }
        let n = l.len();
        let m = l.matrix().clone();
        let label = |i: usize| l.labels()[i].clone();
        if let Some(c) = (0..n).find(|&i| m.get(i, i).abs() == 1) {
            moves.push(KirbyMove::blow_down(label(c)));
        } else if let Some((i, j, s)) = best_slide(&l) {
            moves.push(KirbyMove::slide(label(i), label(j), s));
        } else {
            let (i, j, s, k, s2) = framing_minus_one_pair(&l)?;
            moves.push(KirbyMove::slide(label(i), label(j), s));
            moves.push(KirbyMove::slide(label(i), label(k), s2));
            l = apply_all(&l, &moves[moves.len() - 2..]).ok()?;
            continue;
        }
        l = moves.last().unwrap().apply(&l).ok()?;
    }
    Some(moves)
}

/// The slide bringing some framing closest to zero, if any strictly
/// lowers `|framing|`. The sign follows the linking number.
fn best_slide(l: &FramedLink) -> Option<(usize, usize, Sign)> {
    let m = l.matrix();
    let mut best: Option<(i64, usize, usize, Sign)> = None;
    for i in 0..l.len() {
        for j in 0..l.len() {
            let lk = m.get(i, j);
            if i == j || lk == 0 {
                continue;
            }
            let s = if lk > 0 { Sign::Plus } else { Sign::Minus };
            let f = m.get(i, i) + 2 * s.value() * lk + m.get(j, j);
            if f.abs() < m.get(i, i).abs() && best.map_or(true, |b| f.abs() < b.0) {
                best = Some((f.abs(), i, j, s));
            }
        }
    }
    best.map(|(_, i, j, s)| (i, j, s))
}

fn framing_minus_one_pair(l: &FramedLink) -> Option<(usize, usize, Sign, usize, Sign)> {
    let m = l.matrix();
    let n = l.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                for s in [Sign::Plus, Sign::Minus] {
                    for s2 in [Sign::Plus, Sign::Minus] {
                        let mut v = vec![0i64; n];
                        v[i] = 1;
                        v[j] = s.value();
                        v[k] = s2.value();
                        if m.bilinear(&v, &v) == Some(-1) {
                            return Some((i, j, s, k, s2));
                        }
                    }
                }
            }
        }
    }
    None
}

fn target_moves(target: SurgeryTarget) -> Vec<KirbyMove> {
    match target {
        SurgeryTarget::PlusOneKnot => vec![KirbyMove::blow_up(Sign::Plus, vec![], "K")],
        SurgeryTarget::ZeroKnotWithMeridian => vec![
            KirbyMove::blow_up(Sign::Plus, vec![], "K"),
            KirbyMove::blow_up(Sign::Minus, vec![1], "m"),
        ],
    }
}

/// The diagram a family's script must end at.
pub fn target_link(target: SurgeryTarget) -> FramedLink {
    apply_all(&FramedLink::empty(), &target_moves(target)).expect("target blow-ups are legal")
}

fn opening(p: u64, chain_leg: usize) -> (Vec<KirbyMove>, Vec<String>) {
    let b_leg = 5 - chain_leg;
    let head = |leg: usize| format!("l{leg}.1");
    let mut moves = vec![KirbyMove::blow_down("v0")];
    let carriers = if p == 2 {
        moves.push(KirbyMove::blow_down("l1.1"));
        vec![head(b_leg), head(chain_leg)]
    } else {
        vec!["l1.1".to_string(), head(b_leg), head(chain_leg)]
    };
    (moves, carriers)
}

fn stages(l: &FramedLink, chain_leg: usize, carriers: &[String], n: i64) -> Vec<KirbyMove> {
    let mut moves = Vec::new();
    for k in 0..(n - 1).max(0) {
        let eaten = format!("l{chain_leg}.{}", 2 + k);
        let next = format!("l{chain_leg}.{}", 3 + k);
        for c in carriers {
            moves.push(KirbyMove::slide(eaten.clone(), c.clone(), Sign::Plus));
        }
        moves.push(KirbyMove::blow_down(eaten));
        if l.index_of(&next).is_ok() {
            for c in carriers.iter().rev() {
                moves.push(KirbyMove::slide(next.clone(), c.clone(), Sign::Minus));
            }
        }
    }
    moves
}

fn relabel(mv: &KirbyMove, from: &[String], to: &[String]) -> KirbyMove {
    let map = |s: &String| -> String {
        from.iter().position(|x| x == s).map(|i| to[i].clone()).unwrap_or_else(|| s.clone())
    };
    match mv {
        KirbyMove::BlowDown { component } => KirbyMove::blow_down(map(component)),
        KirbyMove::Slide { moving, over, sign } => KirbyMove::slide(map(moving), map(over), *sign),
        KirbyMove::BlowUp { sign, linking, label } => KirbyMove::blow_up(*sign, linking.clone(), label.clone()),
    }
}

/// A script reducing the plumbing link of the `n`-th family member to its
/// surgery target.
pub fn script_generator(id: FamilyId, n: i64) -> Result<KirbyScript> {
    let t = family(id, n)?;
    let spec = id.spec();
    let stuck = || Error::UnsupportedFamily(id.as_str());
    let expect = target_link(spec.target);
    let mut annotations = vec![
        "reconstructed at the linking-matrix level and checked by replay".to_string(),
        "knot types of the final components are not verified up to isotopy".to_string(),
    ];

    if t.is_degenerate() {
        return Ok(KirbyScript {
            name: format!("{id} n={n} {t}"),
            initial: FramedLink::empty(),
            moves: target_moves(spec.target),
            expect,
            annotations: vec!["S^3 is (+1)-surgery on the unknot".to_string()],
        });
    }

    let initial = plumbing_to_link(&brieskorn_plumbing(&t)?);
    let mut moves = Vec::new();
    match spec.chain_leg {
        None => {
            moves = greedy_reduction(&initial).ok_or_else(stuck)?;
            annotations.push(format!("direct reduction, {} moves", moves.len()));
        }
        Some(chain_leg) => {
            let (open, carriers) = opening(t.p(), chain_leg);
            let opened = apply_all(&initial, &open)?;
            let staged_moves = stages(&opened, chain_leg, &carriers, n);
            let staged = apply_all(&opened, &staged_moves)?;

            let base_initial = plumbing_to_link(&brieskorn_plumbing(&family(id, spec.min_n)?)?);
            let base = apply_all(&base_initial, &open)?;
            if base.matrix() != staged.matrix() {
                return Err(stuck());
            }
            let tail = greedy_reduction(&base).ok_or_else(stuck)?;
            annotations.push(format!(
                "opening of {} blow-downs, {} reduction stages, base reduction of {} moves",
                open.len(),
                (n - spec.min_n).max(0),
                tail.len()
            ));
            moves.extend(open);
            moves.extend(staged_moves);
            moves.extend(tail.iter().map(|mv| relabel(mv, base.labels(), staged.labels())));
        }
    }
    moves.extend(target_moves(spec.target));
    Ok(KirbyScript { name: format!("{id} n={n} {t}"), initial, moves, expect, annotations })
}
