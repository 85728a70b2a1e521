//! Everything computable about a single triple.

use std::fmt::Write as _;

use brieskorn_core::casson::casson_brieskorn;
use brieskorn_core::matrix::{determinant, is_negative_definite, signature};
use brieskorn_core::plumbing::{brieskorn_plumbing, intersection_matrix};
use brieskorn_core::seifert::seifert_invariants;
use brieskorn_core::wu::{mubar_of_matrix, wu_class};
use brieskorn_core::BrieskornTriple;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::formats::PlumbingJson;
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertJson {
    pub b: i64,
    pub legs: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoReport {
    pub triple: [u64; 3],
    pub degenerate: bool,
    pub seifert: Option<SeifertJson>,
    pub plumbing: Option<PlumbingJson>,
    pub determinant: i64,
    pub negative_definite: bool,
    pub signature: i64,
    pub wu_class: Vec<u8>,
    pub wu_square: i64,
    pub mubar: i64,
    pub obstructed: bool,
    pub casson: Option<i64>,
}

/// True for `Σ(2,3,6n+1)`, where the lattice count is cheap and the
/// twist-knot comparison applies.
pub fn is_twist_member(t: &BrieskornTriple) -> bool {
    let [p, q, r] = t.as_array();
    (p, q) == (2, 3) && r % 6 == 1 || t.as_array() == [1, 2, 3]
}

pub fn info(t: &BrieskornTriple, with_casson: bool) -> Result<InfoReport, Error> {
    let casson = if with_casson || is_twist_member(t) { Some(casson_brieskorn(t)?) } else { None };
    if t.is_degenerate() {
        return Ok(InfoReport {
            triple: t.as_array(),
            degenerate: true,
            seifert: None,
            plumbing: None,
            determinant: 1,
            negative_definite: true,
            signature: 0,
            wu_class: Vec::new(),
            wu_square: 0,
            mubar: 0,
            obstructed: false,
            casson,
        });
    }
    let s = seifert_invariants(t)?;
    let g = brieskorn_plumbing(t)?;
    let m = intersection_matrix(&g);
    let mu = mubar_of_matrix(&m)?;
    Ok(InfoReport {
        triple: t.as_array(),
        degenerate: false,
        seifert: Some(SeifertJson {
            b: s.central_weight(),
            legs: s.legs().iter().map(|l| [l.alpha, l.beta]).collect(),
        }),
        plumbing: Some(PlumbingJson::from(&g)),
        determinant: determinant(&m).to_i64().ok_or(brieskorn_core::Error::Overflow)?,
        negative_definite: is_negative_definite(&m),
        signature: signature(&m)?,
        wu_class: wu_class(&m)?.coords().to_vec(),
        wu_square: mu.wu_square,
        mubar: mu.mubar,
        obstructed: mu.obstructed,
        casson,
    })
}

pub fn render_text(r: &InfoReport) -> String {
    let [p, q, r3] = r.triple;
    let mut out = String::new();
    if r.degenerate {
        writeln!(out, "Σ({p},{q},{r3}) = S^3").unwrap();
    } else {
        writeln!(out, "Σ({p},{q},{r3})").unwrap();
    }
    if let Some(s) = &r.seifert {
        let legs: Vec<String> = s.legs.iter().map(|[a, b]| format!("({a},{b})")).collect();
        writeln!(out, "seifert      b = {}; {}", s.b, legs.join(" ")).unwrap();
    }
    if let Some(g) = &r.plumbing {
        writeln!(out, "weights      {:?}", g.weights).unwrap();
        writeln!(out, "edges        {:?}", g.edges).unwrap();
        writeln!(out, "vertices     {}", g.weights.len()).unwrap();
    }
    writeln!(out, "det          {}", r.determinant).unwrap();
    writeln!(out, "neg. def.    {}", r.negative_definite).unwrap();
    writeln!(out, "signature    {}", r.signature).unwrap();
    writeln!(out, "wu class     {:?}", r.wu_class).unwrap();
    writeln!(out, "wu square    {}", r.wu_square).unwrap();
    writeln!(out, "mubar        {}", r.mubar).unwrap();
    writeln!(out, "obstructed   {}", r.obstructed).unwrap();
    if let Some(c) = r.casson {
        writeln!(out, "casson       {c}").unwrap();
    }
    out
}
