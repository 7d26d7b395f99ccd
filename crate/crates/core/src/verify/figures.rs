//! The worked examples drawn in the figures, checked against their printed data.

use serde_json::json;

use crate::bijections::{ehh_forward, eta_inverse, phi, psi, psi_inverse, DominoSequence};
use crate::lattice::{DecoratedLabelledPath, DinvKind, PolyominoPaths, PolyominoWord, Step};

use super::VerificationReport;

const SUITE: &str = "figures";

/// Area word printed under the 6 x 11 reduced polyomino figure.
pub const PRINTED_FIGURE_WORD: &str = "0 0~ 1 1~ 2 1~ 1~ 1 0~ 0~ 0 0~ 0~ 0~ 1 1 1~ 1~";

fn steps(s: &str) -> Vec<Step> {
    s.chars().map(|c| if c == 'H' { Step::H } else { Step::V }).collect()
}

/// The area word computed from the drawn red and green paths of the 6 x 11 polyomino figure,
/// each preceded by its ghost step.
pub fn figure_polyomino_word() -> Result<PolyominoWord, crate::lattice::LatticeError> {
    let paths = PolyominoPaths { red: steps("HVVHVVHHVVHVVVHVVH"), green: steps("HHHVVVVHVHVVVHHVVV") };
    PolyominoWord::from_paths(&paths)
}

fn check(check: &str, instance: &str, got: serde_json::Value, want: serde_json::Value) -> VerificationReport {
    let detail = format!("expected {want}");
    let witness = (got != want).then(|| json!({ "expected": want, "got": got }));
    VerificationReport::from_outcome(SUITE, check, instance, detail, witness)
}

fn error_report(check_name: &str, instance: &str, e: impl std::fmt::Display) -> VerificationReport {
    VerificationReport::fail(SUITE, check_name, instance, "construction failed", json!({ "error": e.to_string() }))
}

fn labelled_path_figure() -> VerificationReport {
    let instance = "area 0,1,2,1,2,0,1,1 labels 2,4,5,1,3,2,6,1";
    let p = match DecoratedLabelledPath::labelled(vec![0, 1, 2, 1, 2, 0, 1, 1], vec![2, 4, 5, 1, 3, 2, 6, 1]) {
        Ok(p) => p,
        Err(e) => return error_report("labelled-path", instance, e),
    };
    let pairs: Vec<_> = p
        .dinv_pairs()
        .iter()
        .map(|x| json!([x.i, x.j, if x.kind == DinvKind::Primary { "primary" } else { "secondary" }]))
        .collect();
    let word: String = p.dinv_reading_word().iter().map(u32::to_string).collect();
    let got = json!({ "area": p.area(), "dinv": p.dinv(), "pairs": pairs, "reading_word": word });
    let want = json!({
        "area": 8,
        "dinv": 6,
        "pairs": [[2, 6, "secondary"], [2, 7, "primary"], [3, 4, "secondary"], [3, 8, "secondary"], [4, 7, "primary"], [5, 8, "secondary"]],
        "reading_word": "22416153",
    });
    let mut sorted = got.clone();
    if let Some(arr) = sorted["pairs"].as_array_mut() {
        arr.sort_by_key(|v| (v[0].as_u64(), v[1].as_u64()));
    }
    check("labelled-path", instance, sorted, want)
}

fn zero_composition_figure() -> VerificationReport {
    let instance = "area 0,1,2,2,2,0,1,2,0,1,1,0 labels 0,1,2,0,0,0,3,4,0,5,0,0";
    let p = DecoratedLabelledPath::labelled(vec![0, 1, 2, 2, 2, 0, 1, 2, 0, 1, 1, 0], vec![0, 1, 2, 0, 0, 0, 3, 4, 0, 5, 0, 0]);
    match p.and_then(|p| p.zero_composition()) {
        Ok(c) => check("zero-composition", instance, json!(c.parts()), json!([3, 1, 2, 1])),
        Err(e) => error_report("zero-composition", instance, e),
    }
}

fn big_car_composition_figure() -> VerificationReport {
    let instance = "area 0,0,1,1,2,0,0,1,1,2,2,0 labels 2,1,2,1,2,2,1,2,1,2,1,2";
    let p = DecoratedLabelledPath::new(
        vec![0, 0, 1, 1, 2, 0, 0, 1, 1, 2, 2, 0],
        Some(vec![2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 1, 2]),
        [],
        true,
    );
    match p.and_then(|p| p.big_car_composition()) {
        Ok(c) => check("big-car-composition", instance, json!(c.parts()), json!([3, 3, 1])),
        Err(e) => error_report("big-car-composition", instance, e),
    }
}

fn polyomino_codec_figure() -> VerificationReport {
    let instance = "6x11 reduced polyomino";
    let printed = match PolyominoWord::parse(PRINTED_FIGURE_WORD) {
        Ok(w) => w,
        Err(e) => return error_report("polyomino-area-word", instance, e),
    };
    match figure_polyomino_word() {
        Ok(w) => check("polyomino-area-word", instance, json!(w.to_string()), json!(printed.to_string())),
        Err(e) => error_report("polyomino-area-word", instance, e),
    }
}

fn plbounce_chain_figure() -> VerificationReport {
    let instance = "area 0,1,2,2,2,1,2,3,2,3,3,3 labels 0,1,2,0,0,0,3,4,0,5,0,0";
    let d = DecoratedLabelledPath::new(
        vec![0, 1, 2, 2, 2, 1, 2, 3, 2, 3, 3, 3],
        Some(vec![0, 1, 2, 0, 0, 0, 3, 4, 0, 5, 0, 0]),
        [2, 3, 7, 8, 10],
        false,
    );
    let run = || -> Result<serde_json::Value, Box<dyn std::error::Error>> {
        let pf = psi(&eta_inverse(&d?)?)?;
        Ok(json!({ "area": pf.area_word(), "labels": pf.labels() }))
    };
    match run() {
        Ok(got) => check(
            "plbounce-chain",
            instance,
            got,
            json!({ "area": [0, 0, 1, 1, 2, 1, 0, 1, 1, 2, 2, 2], "labels": [2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 2, 1] }),
        ),
        Err(e) => error_report("plbounce-chain", instance, e),
    }
}

fn block_map_figure() -> VerificationReport {
    let instance = "6x11 reduced polyomino";
    let run = || -> Result<String, Box<dyn std::error::Error>> {
        let w = figure_polyomino_word()?;
        let image = phi(&DominoSequence::from_path(&psi(&w)?)?)?;
        Ok(psi_inverse(&image.to_path()?)?.to_string())
    };
    let want = PolyominoWord::parse("0 0~ 0~ 1 0~ 0~ 0~ 1 1 1~ 1~ 0 0~ 1 1 1~ 1~").map(|w| w.to_string());
    match (run(), want) {
        (Ok(got), Ok(want)) => check("block-map", instance, json!(got), json!(want)),
        (Err(e), _) => error_report("block-map", instance, e),
        (_, Err(e)) => error_report("block-map", instance, e),
    }
}

fn ehh_figure() -> VerificationReport {
    let instance = "(3,5,6)-shuffle with reading word 51827364";
    let run = || -> Result<serde_json::Value, Box<dyn std::error::Error>> {
        let d = DecoratedLabelledPath::labelled(vec![0, 1, 1, 1, 0, 1, 2, 2], vec![5, 8, 2, 7, 1, 3, 6, 4])?;
        let word: String = d.dinv_reading_word().iter().map(u32::to_string).collect();
        let p = ehh_forward(&d, 3, 5, 6)?;
        Ok(json!({
            "reading_word": word,
            "area": p.area_word(),
            "labels": p.labels(),
            "decorated_rises": p.decorated_rises(),
            "statistics_kept": (p.dinv(), p.area()) == (d.dinv(), d.area()),
        }))
    };
    match run() {
        Ok(got) => check(
            "ehh-bijection",
            instance,
            got,
            json!({
                "reading_word": "51827364",
                "area": [0, 0, 1, 1, 2, 1, 0, 1, 1, 2, 2, 2],
                "labels": [2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 2, 1],
                "decorated_rises": [5, 8, 10],
                "statistics_kept": true,
            }),
        ),
        Err(e) => error_report("ehh-bijection", instance, e),
    }
}

/// The printed examples: path statistics, compositions, the polyomino codec and the maps
/// illustrated on worked examples.
pub fn figures_suite() -> Vec<VerificationReport> {
    vec![
        labelled_path_figure(),
        zero_composition_figure(),
        big_car_composition_figure(),
        polyomino_codec_figure(),
        plbounce_chain_figure(),
        block_map_figure(),
        ehh_figure(),
    ]
}
