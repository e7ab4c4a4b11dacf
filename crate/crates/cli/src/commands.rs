use std::fmt::Write as _;
use std::io::Write;

use serde::Serialize;
use stcore::bead::{self, BeadGrid};
use stcore::canonical::{self, Anchor, CanonicalType, SlideMove, TriangleRegion};
use stcore::closure::{self, delta_size, height, max_delta_with_size, width};
use stcore::partition::{beta_of_partition, hook_multiset, hook_row, partition_of_beta};
use stcore::tcore::{self, TParams};
use stcore::verify::{self, EnumerationReport, LemmaBounds};
use stcore::{BetaSet, CoreParams, DeltaSet, HookRow, Partition};

use crate::{cache, Cli, CliError, Command, Format, ShapeArgs, TcoreAction, VerifyCheck, FORMAT_VERSION};

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    version: u32,
    #[serde(flatten)]
    body: &'a T,
}

fn json<T: Serialize>(body: &T) -> String {
    let mut text = serde_json::to_string_pretty(&Envelope { version: FORMAT_VERSION, body })
        .expect("outputs serialize");
    text.push('\n');
    text
}

fn emit<T: Serialize>(format: Format, body: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => json(body),
        Format::Text => text(),
    }
}

fn params(pair: &crate::PairArgs) -> Result<CoreParams, CliError> {
    Ok(CoreParams::new(pair.s, pair.t)?)
}

fn beta_arg(values: &[u32]) -> Result<BetaSet, CliError> {
    Ok(BetaSet::from_unsorted(values.iter().copied())?)
}

fn shape(args: &ShapeArgs) -> Result<(Partition, BetaSet), CliError> {
    match (&args.partition, &args.beta) {
        (Some(parts), _) => {
            let p = Partition::new(parts.clone())?;
            let b = beta_of_partition(&p);
            Ok((p, b))
        }
        (None, Some(values)) => {
            let b = beta_arg(values)?;
            Ok((partition_of_beta(&b), b))
        }
        (None, None) => Err(CliError::Usage("one of --partition or --beta is required".into())),
    }
}

pub(crate) fn dispatch(cli: &Cli, err: &mut dyn Write) -> Result<String, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Convert(args) => convert(f, args),
        Command::Hooks { shape: args, row } => hooks(f, args, *row),
        Command::Closure { pair, beta } => {
            let p = params(pair)?;
            let b = beta_arg(beta)?;
            let c = closure::closure(p, &b);
            #[derive(Serialize)]
            struct Out<'a> {
                s: u32,
                t: u32,
                beta: &'a BetaSet,
                closure: &'a BetaSet,
            }
            let body = Out { s: p.s(), t: p.t(), beta: &b, closure: &c };
            Ok(emit(f, &body, || format!("{c}\n")))
        }
        Command::CheckCore { pair, beta } => {
            let p = params(pair)?;
            let b = beta_arg(beta)?;
            #[derive(Serialize)]
            struct Out<'a> {
                s: u32,
                t: u32,
                beta: &'a BetaSet,
                closed: bool,
                core: bool,
            }
            let body = Out {
                s: p.s(),
                t: p.t(),
                beta: &b,
                closed: closure::is_closed(p, &b),
                core: closure::is_core(p, &b),
            };
            Ok(emit(f, &body, || format!("closed: {}\ncore: {}\n", body.closed, body.core)))
        }
        Command::Generators { pair, beta } => {
            let p = params(pair)?;
            let b = beta_arg(beta)?;
            let g = closure::generators(p, &b)?;
            #[derive(Serialize)]
            struct Out<'a> {
                s: u32,
                t: u32,
                beta: &'a BetaSet,
                generators: &'a BetaSet,
            }
            let body = Out { s: p.s(), t: p.t(), beta: &b, generators: &g };
            Ok(emit(f, &body, || format!("{g}\n")))
        }
        Command::Bead { pair, extend_rows, extend_cols, circle } => {
            let p = params(pair)?;
            let circled = beta_arg(circle)?;
            let d = bead::build(p, *extend_rows, *extend_cols);
            #[derive(Serialize)]
            struct Out {
                s: u32,
                t: u32,
                extra_rows: u32,
                extra_cols: u32,
                #[serde(flatten)]
                grid: BeadGrid,
                core: bool,
            }
            let body = Out {
                s: p.s(),
                t: p.t(),
                extra_rows: *extend_rows,
                extra_cols: *extend_cols,
                grid: d.to_grid(&circled),
                core: bead::diagram_core_check(&d, &circled),
            };
            Ok(emit(f, &body, || {
                let mut text = bead::render(&d, &circled);
                if !circled.is_empty() {
                    let _ = writeln!(text, "core: {}", body.core);
                }
                text
            }))
        }
        Command::Delta { pair, generator, size } => delta(f, params(pair)?, *generator, *size),
        Command::Canonical { pair, beta, apex, depth, trace } => {
            canonical_cmd(f, params(pair)?, beta, *apex, *depth, *trace)
        }
        Command::Enumerate { pair, by_size, witnesses, guard } => {
            let p = params(pair)?;
            let mut report = match &cli.cache {
                Some(dir) => cache::cached_core_report(dir, p, *guard, err)?,
                None => verify::core_report(p, *guard, *witnesses)?,
            };
            if !witnesses {
                report.witnesses = None;
            }
            Ok(emit(f, &report, || enumerate_text(&report, *by_size)))
        }
        Command::Verify { check, pair, gen_bound, n_max, guard } => {
            let p = params(pair)?;
            let (name, report) = match check {
                VerifyCheck::Maximal => ("maximal", verify::check_maximal_theorem(p, *guard)?),
                VerifyCheck::Gen1 => (
                    "gen1",
                    verify::check_first_generalization(p, gen_bound.unwrap_or(30), *guard)?,
                ),
                VerifyCheck::Gen2 => (
                    "gen2",
                    verify::check_second_generalization(p, n_max.unwrap_or(8), *guard)?,
                ),
                VerifyCheck::Lemmas => {
                    let defaults = LemmaBounds::default();
                    let bounds = LemmaBounds {
                        gen_bound: gen_bound.unwrap_or(defaults.gen_bound),
                        n_max: n_max.unwrap_or(defaults.n_max),
                        ..defaults
                    };
                    ("lemmas", verify::check_lemmas(p, bounds, *guard)?)
                }
            };
            Ok(emit(f, &report, || report_text(name, &report)))
        }
        Command::Tcore { action, ts, n_max, guard } => tcore_cmd(f, *action, ts, *n_max, *guard),
    }
}

fn convert(f: Format, args: &ShapeArgs) -> Result<String, CliError> {
    let (p, b) = shape(args)?;
    #[derive(Serialize)]
    struct Out<'a> {
        partition: &'a Partition,
        beta_set: &'a BetaSet,
    }
    let body = Out { partition: &p, beta_set: &b };
    Ok(emit(f, &body, || format!("partition {p}\nbeta-set {b}\n")))
}

fn hooks(f: Format, args: &ShapeArgs, row: Option<usize>) -> Result<String, CliError> {
    let (p, b) = shape(args)?;
    let rows = match row {
        Some(r) => vec![hook_row(&b, r)?],
        None => (1..=b.len())
            .map(|r| hook_row(&b, r))
            .collect::<Result<Vec<HookRow>, _>>()?,
    };
    let multiset = hook_multiset(&p);
    #[derive(Serialize)]
    struct Out<'a> {
        partition: &'a Partition,
        beta_set: &'a BetaSet,
        rows: &'a [HookRow],
        multiset: &'a [u32],
    }
    let body = Out { partition: &p, beta_set: &b, rows: &rows, multiset: &multiset };
    Ok(emit(f, &body, || {
        let mut text = String::new();
        for r in &rows {
            let hooks = BetaSet::from_unsorted(r.hooks.iter().copied()).expect("hooks are distinct");
            let _ = writeln!(text, "H_{} = {hooks}", r.row);
        }
        let joined: Vec<String> = multiset.iter().map(u32::to_string).collect();
        let _ = writeln!(text, "multiset {}", joined.join(" "));
        text
    }))
}

fn delta(f: Format, p: CoreParams, generator: Option<u32>, size: Option<usize>) -> Result<String, CliError> {
    let d: DeltaSet = match (generator, size) {
        (Some(g), _) => closure::delta(p, g),
        (None, Some(n)) => max_delta_with_size(p, n)?,
        (None, None) => return Err(CliError::Usage("one of --generator or --size is required".into())),
    };
    #[derive(Serialize)]
    struct Out<'a> {
        #[serde(flatten)]
        delta: &'a DeltaSet,
        size: usize,
        width: usize,
        height: usize,
    }
    let body = Out {
        delta: &d,
        size: delta_size(p, d.generator()),
        width: width(p, d.elements()),
        height: height(p, d.elements()),
    };
    Ok(emit(f, &body, || {
        format!(
            "generator {}\nelements {}\nsize {}\nwidth {}\nheight {}\n",
            d.generator(),
            d.elements(),
            body.size,
            body.width,
            body.height
        )
    }))
}

fn canonical_cmd(
    f: Format,
    p: CoreParams,
    beta: &[u32],
    apex: Option<u32>,
    depth: Option<u32>,
    trace: bool,
) -> Result<String, CliError> {
    let b = beta_arg(beta)?;
    let region = match (apex, depth) {
        (Some(n), Some(i)) => TriangleRegion::new(p, n, i)?,
        (Some(n), None) => TriangleRegion::deepest(p, n)?,
        (None, Some(i)) => {
            let n = u32::try_from(p.frobenius()).map_err(|_| stcore::Error::Overflow)?;
            TriangleRegion::new(p, n, i)?
        }
        (None, None) => TriangleRegion::for_maximal(p)?,
    };
    let justified = canonical::top_justify(&region, &b)?;
    let (_, moves) = canonical::slide_step2_traced(&region, &justified)?;
    let form = canonical::canonical_form(&region, &b)?;
    let kind = canonical::classify_type(&form).ok();

    #[derive(Serialize)]
    struct Out<'a> {
        region: &'a TriangleRegion,
        input: &'a BetaSet,
        top_justified: &'a BetaSet,
        elements: &'a BetaSet,
        anchor: Option<Anchor>,
        #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
        kind: Option<CanonicalType>,
        #[serde(skip_serializing_if = "Option::is_none")]
        moves: Option<&'a [SlideMove]>,
    }
    let body = Out {
        region: &region,
        input: &b,
        top_justified: &justified,
        elements: &form.elements,
        anchor: form.anchor,
        kind,
        moves: trace.then_some(moves.as_slice()),
    };
    Ok(emit(f, &body, || {
        let mut text = String::new();
        let _ = writeln!(text, "region apex {} depth {}", region.apex(), region.depth());
        let _ = writeln!(text, "input {b}");
        if trace {
            text.push_str(&canonical::render_region(&region, &b));
            text.push('\n');
        }
        let _ = writeln!(text, "top-justified {justified}");
        if trace {
            text.push_str(&canonical::render_region(&region, &justified));
            text.push('\n');
            for (k, m) in moves.iter().enumerate() {
                let _ = writeln!(
                    text,
                    "move {} on diagonal {}: remove {}, insert {}, slide to {}",
                    k + 1,
                    m.diagonal,
                    m.removed,
                    m.inserted,
                    m.landed
                );
                text.push_str(&canonical::render_region(&region, &m.before_slide));
                text.push('\n');
                if m.landed != m.inserted {
                    text.push_str(&canonical::render_region(&region, &m.after_slide));
                    text.push('\n');
                }
            }
        }
        let _ = writeln!(text, "canonical {}", form.elements);
        if let Some(a) = form.anchor {
            let _ = writeln!(text, "anchor {} (a={}, b={})", a.element, a.a, a.b);
        }
        match kind {
            Some(CanonicalType::TypeI) => text.push_str("type I\n"),
            Some(CanonicalType::TypeII) => text.push_str("type II\n"),
            None => {}
        }
        text
    }))
}

fn enumerate_text(report: &EnumerationReport, by_size: bool) -> String {
    let mut text = format!("({},{})-cores: {}\n", report.s, report.t, report.count);
    if by_size {
        for (size, count) in &report.by_size {
            let _ = writeln!(text, "size {size}: {count}");
        }
    }
    for b in report.witnesses.iter().flatten() {
        let _ = writeln!(text, "{b}");
    }
    text
}

fn report_text(name: &str, report: &EnumerationReport) -> String {
    let mut text = format!(
        "{name} ({},{}): {} checked, {} violations\n",
        report.s,
        report.t,
        report.count,
        report.violations.len()
    );
    if let Some(status) = &report.status {
        let _ = writeln!(text, "status: {status}");
    }
    for (claim, count) in &report.tallies {
        let _ = writeln!(text, "{claim}: {count}");
    }
    for v in &report.violations {
        let w = &v.witness;
        let n = w.n.map(|n| format!(" n={n}")).unwrap_or_default();
        let _ = writeln!(
            text,
            "violation [{}]{n}: {} {} not contained in {} {}",
            v.claim, w.beta, w.beta_partition, w.bound, w.bound_partition
        );
    }
    if !report.observations.is_empty() {
        let _ = writeln!(text, "observations: {}", report.observations.len());
        for o in &report.observations {
            let w = &o.witness;
            let n = w.n.map(|n| format!(" n={n}")).unwrap_or_default();
            let _ = writeln!(text, "  [{}]{n}: {} not contained in {}", o.claim, w.beta, w.bound);
        }
    }
    text
}

fn tcore_cmd(f: Format, action: TcoreAction, ts: &[u32], n_max: usize, guard: usize) -> Result<String, CliError> {
    if action == TcoreAction::Conjecture {
        let [s, t] = ts else {
            return Err(CliError::Usage("--ts: conjecture takes exactly two entries".into()));
        };
        let p = CoreParams::new(*s, *t)?;
        let report = tcore::conjecture_error_term(p, n_max, guard)?;
        return Ok(emit(f, &report, || report_text("conjecture", &report)));
    }
    let params = TParams::new(ts.to_vec())?;
    match action {
        TcoreAction::BetaT => {
            let b = tcore::beta_t(&params);
            #[derive(Serialize)]
            struct Out<'a> {
                ts: &'a [u32],
                beta_t: &'a BetaSet,
            }
            let body = Out { ts: params.ts(), beta_t: &b };
            Ok(emit(f, &body, || format!("{b}\n")))
        }
        TcoreAction::Enumerate => {
            let mut sets: Vec<BetaSet> = tcore::enumerate_t_core(&params, guard)?.collect();
            sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            #[derive(Serialize)]
            struct Out<'a> {
                ts: &'a [u32],
                count: usize,
                sets: &'a [BetaSet],
            }
            let body = Out { ts: params.ts(), count: sets.len(), sets: &sets };
            Ok(emit(f, &body, || {
                let mut text = format!("T-cores: {}\n", sets.len());
                for b in &sets {
                    let _ = writeln!(text, "{b}");
                }
                text
            }))
        }
        TcoreAction::Maximal => {
            let report = tcore::maximal_elements(&params, guard)?;
            Ok(emit(f, &report, || {
                let mut text = format!("unique: {}\n", report.unique);
                for m in &report.maximal_elements {
                    let _ = writeln!(text, "{} {}", m.beta, m.partition);
                }
                text
            }))
        }
        TcoreAction::Conjecture => unreachable!("handled above"),
    }
}
