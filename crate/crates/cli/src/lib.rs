//! Command-line front end for `alglens`.
//!
//! [`run`] takes the full argument vector and writes to the given streams so
//! the golden tests can drive it in-process. Exit codes: 0 success, 1 domain
//! error, 2 usage or parse error, 3 internal consistency fault.
//!
//! JSON field names are part of the interface and must not change:
//!
//! | subcommand       | fields |
//! |------------------|--------|
//! | `invariance`     | `poly`, `p`, `q`, `k` |
//! | `lift`           | `p`, `q`, `n`, `lifted_word`, `components`, and with `--compare-torus`: `alexander`, `torus`, `torus_alexander`, `equal_up_to_unit`, `note` |
//! | `torus-test`     | `a`, `b`, `p`, `q`, `link_lift`, `k`, `knot_lift` |
//! | `genus --torus`  | `p`, `lift_genus`, `lift_components`, `quotient_genus` |
//! | `genus --k`      | `p`, `k`, `lift_genus`, `fiber_multiplicity`, `quotient_genus`, `validated` |
//! | `alexander`      | `source`, `strands`, `alexander` |
//! | `puiseux`        | `m`, `exponents`, `pairs` |
//! | `homology`       | `p`, `q`, `n`, `components`, `classes`, `sum`, `lifted_components` |
//! | `nullhomologous` | `p`, `q`, `orientation` |
//!
//! Errors go to the error stream, as `{"error": {...}}` under `--json`.

use std::ffi::OsString;
use std::io::Write;

use alglens::{
    alexander_of_closure, fiber_multiplicity, parse_poly, puiseux_pairs, quotient_genus, torus_braid,
    torus_knot_in_lens_criterion, torus_lift_criterion, torus_quotient_genus, Alexander, BandDiagram,
    BraidWord, Error, PuiseuxData,
};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

/// Upper bound on strands accepted from the command line.
pub const MAX_STRANDS: usize = 20;
/// Upper bound on the length of any braid word the CLI will build.
pub const MAX_WORD_LEN: u128 = 200_000;

#[derive(Debug, Parser)]
#[command(name = "alglens", version, about = "Algebraic links in lens spaces")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariance class k of a polynomial under (x,y) -> (zeta x, zeta^q y).
    Invariance {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Lift a band diagram "p q n : word" to a braid in the 3-sphere.
    Lift {
        #[arg(long)]
        band: String,
        /// Compare the lift's Alexander polynomial with that of T(a,b).
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        compare_torus: Option<Vec<u64>>,
    },
    /// Whether T(a,b) lifts an algebraic link in L(p,q) / an algebraic knot.
    TorusTest {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: Option<u64>,
    },
    /// Seifert genus of a quotient knot.
    Genus(GenusArgs),
    /// Alexander polynomial of a braid closure or of a lifted band diagram.
    Alexander {
        #[arg(long, conflicts_with = "band", requires = "strands")]
        braid: Option<String>,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long, required_unless_present = "braid")]
        band: Option<String>,
    },
    /// Rewrite Puiseux exponents into coprime cable pairs.
    Puiseux {
        #[arg(long)]
        m: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u64>,
        /// Drop pairs with m_i = 1.
        #[arg(long)]
        characteristic_only: bool,
    },
    /// Homology classes of the components of a band diagram.
    Homology {
        #[arg(long)]
        band: String,
    },
    /// Search for an orientation making the link nullhomologous.
    Nullhomologous {
        #[arg(long)]
        band: String,
    },
}

#[derive(Debug, Args)]
struct GenusArgs {
    /// Quotient of the torus link T(a,b) in L(gcd(a,b), q).
    #[arg(long, num_args = 2, value_names = ["A", "B"], conflicts_with_all = ["p", "k", "lift_genus"])]
    torus: Option<Vec<u64>>,
    #[arg(long, required_unless_present = "torus")]
    p: Option<u64>,
    #[arg(long, required_unless_present = "torus")]
    k: Option<u64>,
    #[arg(long, required_unless_present = "torus")]
    lift_genus: Option<u64>,
}

/// Text and JSON renderings of one command's result.
struct Report {
    text: String,
    json: Value,
}

pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json_requested = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let message = e.kind().to_string();
            if json_requested {
                let _ = writeln!(err, "{}", json!({"error": {"kind": "usage", "message": message}}));
            } else {
                let _ = write!(err, "{e}");
            }
            return 2;
        }
    };
    match dispatch(&cli.command) {
        Ok(report) => {
            let written = if cli.json {
                writeln!(out, "{}", report.json)
            } else {
                writeln!(out, "{}", report.text)
            };
            u8::from(written.is_err())
        }
        Err(e) => {
            let (kind, code) = classify(&e);
            if cli.json {
                let mut body = json!({"kind": kind, "message": e.to_string()});
                if let Error::Parse { position, .. } = e {
                    body["position"] = json!(position);
                }
                let _ = writeln!(err, "{}", json!({ "error": body }));
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            code
        }
    }
}

fn classify(e: &Error) -> (&'static str, u8) {
    match e {
        Error::Parse { .. } => ("parse", 2),
        Error::ConsistencyFault(_) => ("consistency-fault", 3),
        Error::InvalidArgument(_) => ("invalid-argument", 1),
        Error::Divisibility(_) => ("divisibility", 1),
        Error::IncompleteData(_) => ("incomplete-data", 1),
        Error::Inconsistency(_) => ("inconsistency", 1),
    }
}

fn dispatch(command: &Command) -> alglens::Result<Report> {
    match command {
        Command::Invariance { poly, p, q } => invariance(poly, *p, *q),
        Command::Lift { band, compare_torus } => lift(band, compare_torus.as_deref()),
        Command::TorusTest { a, b, p, q } => torus_test(*a, *b, *p, *q),
        Command::Genus(args) => genus(args),
        Command::Alexander { braid, strands, band } => alexander(braid.as_deref(), *strands, band.as_deref()),
        Command::Puiseux { m, exponents, characteristic_only } => puiseux(*m, exponents, *characteristic_only),
        Command::Homology { band } => homology(band),
        Command::Nullhomologous { band } => nullhomologous(band),
    }
}

fn too_large(what: &str) -> Error {
    Error::InvalidArgument(format!("{what} exceeds the command-line size limits"))
}

fn parse_band(text: &str) -> alglens::Result<BandDiagram> {
    let d = BandDiagram::parse(text)?;
    if d.strands() > MAX_STRANDS {
        return Err(too_large(&format!("{} strands", d.strands())));
    }
    Ok(d)
}

fn checked_lift(d: &BandDiagram) -> alglens::Result<BraidWord> {
    if d.lift_len() > MAX_WORD_LEN {
        return Err(too_large("the lifted braid word"));
    }
    Ok(d.lift())
}

fn alexander_poly(word: &BraidWord) -> alglens::Result<Alexander> {
    alexander_of_closure(word)
}

fn invariance(poly: &str, p: u64, q: u64) -> alglens::Result<Report> {
    let f = parse_poly(poly)?;
    let k = f.invariance_class(p, q)?;
    let text = match k {
        Some(k) => format!("k = {k}"),
        None => format!("not ({p},{q})-invariant"),
    };
    Ok(Report {
        text,
        json: json!({"poly": f.to_string(), "p": p, "q": q, "k": k}),
    })
}

fn lift(band: &str, compare: Option<&[u64]>) -> alglens::Result<Report> {
    let d = parse_band(band)?;
    let lifted = checked_lift(&d)?;
    let components = lifted.closure_components().len();
    let mut json = json!({
        "p": d.space().p(),
        "q": d.space().q(),
        "n": d.strands(),
        "lifted_word": lifted.letters(),
        "components": components,
    });
    let mut text = format!("lifted_word: {lifted}\ncomponents: {components}");
    if let Some(&[a, b]) = compare {
        let n = lifted.strands() as u64;
        // T(a,b) = T(b,a): use whichever presentation has the lift's strand count.
        let torus = if n == b {
            Some(torus_braid(a as usize, b as usize)?)
        } else if n == a {
            Some(torus_braid(b as usize, a as usize)?)
        } else {
            None
        };
        let ours = alexander_poly(&lifted)?;
        json["alexander"] = json!(ours.to_string());
        json["torus"] = json!([a, b]);
        text = format!("lifted_word: {lifted}\nalexander: {ours}");
        match torus {
            Some(torus) => {
                if torus.len() as u128 > MAX_WORD_LEN {
                    return Err(too_large("the torus braid"));
                }
                let theirs = alexander_poly(&torus)?;
                let equal = ours.equal_up_to_unit(&theirs);
                let note = (equal && n >= 4).then_some("certified equal at Burau level");
                json["torus_alexander"] = json!(theirs.to_string());
                json["equal_up_to_unit"] = json!(equal);
                json["note"] = json!(note);
                text.push_str(&format!(
                    "\nT({a},{b}) alexander: {theirs}\nequal_up_to_unit: {equal}, components: {components}"
                ));
                if let Some(note) = note {
                    text.push_str(&format!("\nnote: {note}"));
                }
            }
            None => {
                json["torus_alexander"] = Value::Null;
                json["equal_up_to_unit"] = Value::Null;
                json["note"] = json!("incomparable presentations");
                text.push_str(&format!(
                    "\nincomparable presentations: lift has {n} strands, T({a},{b}) has {a} or {b}\ncomponents: {components}"
                ));
            }
        }
    }
    Ok(Report { text, json })
}

fn torus_test(a: u64, b: u64, p: u64, q: Option<u64>) -> alglens::Result<Report> {
    if a == 0 || b == 0 || p == 0 {
        return Err(Error::InvalidArgument("a, b and p must be positive".into()));
    }
    let link = q.map(|q| torus_lift_criterion(a, b, p, q)).transpose()?;
    let knot = torus_knot_in_lens_criterion(a, b, p);
    let mut lines = Vec::new();
    if let (Some(q), Some(k)) = (q, link) {
        lines.push(match k {
            Some(k) => format!("T({a},{b}) lifts an algebraic link in L({p},{q}): yes (k = {k})"),
            None => format!("T({a},{b}) lifts an algebraic link in L({p},{q}): no"),
        });
    }
    let yes_no = if knot { "yes" } else { "no" };
    lines.push(format!("T({a},{b}) lifts an algebraic knot in L({p},q): {yes_no}"));
    Ok(Report {
        text: lines.join("\n"),
        json: json!({
            "a": a,
            "b": b,
            "p": p,
            "q": q,
            "link_lift": link.map(|k| k.is_some()),
            "k": link.flatten(),
            "knot_lift": knot,
        }),
    })
}

fn genus(args: &GenusArgs) -> alglens::Result<Report> {
    if let Some(t) = &args.torus {
        let (a, b) = (t[0], t[1]);
        if a.saturating_mul(b) > MAX_WORD_LEN as u64 {
            return Err(too_large("the torus braid"));
        }
        let res = torus_quotient_genus(a, b)?;
        return Ok(Report {
            text: format!(
                "T({a},{b}): p = {}, lift genus {} ({} components), quotient genus {}",
                res.p,
                res.lift.genus(),
                res.lift.boundary_components(),
                res.quotient_genus
            ),
            json: json!({
                "p": res.p,
                "lift_genus": res.lift.genus(),
                "lift_components": res.lift.boundary_components(),
                "quotient_genus": res.quotient_genus,
            }),
        });
    }
    let (p, k, lift_genus) = match (args.p, args.k, args.lift_genus) {
        (Some(p), Some(k), Some(g)) => (p, k, g),
        _ => return Err(Error::InvalidArgument("--p, --k and --lift-genus go together".into())),
    };
    let pbar = fiber_multiplicity(p, k)?;
    let g = quotient_genus(p, k, lift_genus)?;
    let validated = k == 0;
    let mut text = format!("p = {p}, k = {k}, fiber multiplicity {pbar}, quotient genus {g}");
    if !validated {
        text.push_str("\nnote: unvalidated regime (k != 0)");
    }
    Ok(Report {
        text,
        json: json!({
            "p": p,
            "k": k,
            "lift_genus": lift_genus,
            "fiber_multiplicity": pbar,
            "quotient_genus": g,
            "validated": validated,
        }),
    })
}

fn alexander(braid: Option<&str>, strands: Option<usize>, band: Option<&str>) -> alglens::Result<Report> {
    let (source, word) = match (braid, band) {
        (Some(text), _) => {
            let n = strands.ok_or_else(|| Error::InvalidArgument("--braid needs --strands".into()))?;
            if n > MAX_STRANDS {
                return Err(too_large(&format!("{n} strands")));
            }
            ("braid", BraidWord::parse(n, text)?)
        }
        (None, Some(text)) => ("lift", checked_lift(&parse_band(text)?)?),
        (None, None) => return Err(Error::InvalidArgument("give --braid or --band".into())),
    };
    let poly = alexander_poly(&word)?;
    Ok(Report {
        text: format!("alexander: {poly}"),
        json: json!({"source": source, "strands": word.strands(), "alexander": poly.to_string()}),
    })
}

fn puiseux(m: u64, exponents: &[u64], characteristic_only: bool) -> alglens::Result<Report> {
    let data = PuiseuxData::new(m, exponents.to_vec())?;
    let mut seq = puiseux_pairs(&data)?;
    if characteristic_only {
        seq = seq.characteristic();
    }
    let pairs: Vec<[u64; 2]> = seq.pairs().iter().map(|&(a, b)| [a, b]).collect();
    Ok(Report {
        text: seq.to_string(),
        json: json!({"m": m, "exponents": exponents, "pairs": pairs}),
    })
}

fn homology(band: &str) -> alglens::Result<Report> {
    let d = parse_band(band)?;
    if d.lift_len() > MAX_WORD_LEN {
        return Err(too_large("the lifted braid word"));
    }
    let p = d.space().p();
    let classes = d.homology_classes();
    let lifted = d.lifted_component_count()?;
    let sum = classes.iter().map(|c| c.value()).fold(0u64, |acc, v| (acc + v) % p);
    let mut lines = Vec::new();
    let mut comps = Vec::new();
    for (i, ((cycle, o), c)) in d.components().iter().zip(d.orientations()).zip(&classes).enumerate() {
        let strands: Vec<usize> = cycle.iter().map(|s| s + 1).collect();
        let listed: Vec<String> = strands.iter().map(|s| s.to_string()).collect();
        lines.push(format!(
            "component {}: strands {}, orientation {o}, class {}",
            i + 1,
            listed.join(" "),
            c.value()
        ));
        comps.push(json!({"strands": strands, "orientation": o.to_string(), "class": c.value()}));
    }
    lines.push(format!("sum of classes: {sum} (mod {p})"));
    lines.push(format!("lifted components: {lifted}"));
    Ok(Report {
        text: lines.join("\n"),
        json: json!({
            "p": p,
            "q": d.space().q(),
            "n": d.strands(),
            "components": comps,
            "classes": classes.iter().map(|c| c.value()).collect::<Vec<_>>(),
            "sum": sum,
            "lifted_components": lifted,
        }),
    })
}

fn nullhomologous(band: &str) -> alglens::Result<Report> {
    let d = parse_band(band)?;
    let found = d.nullhomologous_orientation();
    let signs = found.as_ref().map(|o| o.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    let text = match &signs {
        Some(s) => format!("orientation: {}", s.join(" ")),
        None => "no orientation makes the link nullhomologous".to_string(),
    };
    Ok(Report {
        text,
        json: json!({"p": d.space().p(), "q": d.space().q(), "orientation": signs}),
    })
}
