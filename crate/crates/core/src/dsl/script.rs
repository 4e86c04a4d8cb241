//! Line-oriented scripts: one statement per line, `#` comments.
//!
//! ```text
//! field Q                      field F 2
//! object NAME { d:n, ... }
//! gen NAME : objexpr -> objexpr = { deg d : [[a, b], ...], ... }
//! let NAME = term
//! check [LABEL :] term == term
//! pair NAME { X=.., Y=.., eta=.., mu=.., psi=.., eps=.., delta=.., phi=.. }
//! ```

use std::collections::BTreeMap;

use super::lexer::{lex, Tok};
use super::syntax::{ObjExpr, Parser, Term};
use super::{evaluate, typecheck, Env};
use crate::error::{Error, Result};
use crate::frobenius::{FrobeniusPairData, StructureMap};
use crate::gvect::{EntryDiff, GradedObj, Mor};
use crate::matrix::Matrix;
use crate::scalar::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Field(FieldSpec),
    Object {
        name: String,
        dims: Vec<(i32, usize)>,
    },
    /// Block entries stay literal until the field is known.
    Gen {
        name: String,
        dom: ObjExpr,
        cod: ObjExpr,
        blocks: Vec<(i32, Vec<Vec<String>>)>,
    },
    Let {
        name: String,
        term: Term,
    },
    Check {
        label: Option<String>,
        lhs: Term,
        rhs: Term,
    },
    Pair {
        name: String,
        bindings: Vec<(String, String)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    /// `(line, statement)`, in file order.
    pub statements: Vec<(usize, Statement)>,
}

const ROLES: [&str; 8] = ["X", "Y", "eta", "mu", "psi", "eps", "delta", "phi"];

fn num<T: std::str::FromStr>(p: &mut Parser, wanted: &str) -> Result<T> {
    match p.peek().clone() {
        Tok::Num(s) => match s.parse() {
            Ok(v) => {
                p.next();
                Ok(v)
            }
            Err(_) => Err(p.error(format!("`{s}` is not a valid {wanted}"))),
        },
        _ => Err(p.unexpected(wanted)),
    }
}

fn matrix_literal(p: &mut Parser) -> Result<Vec<Vec<String>>> {
    p.expect(Tok::LBracket)?;
    let mut rows = Vec::new();
    if p.eat(&Tok::RBracket) {
        return Ok(rows);
    }
    loop {
        p.expect(Tok::LBracket)?;
        let mut row = Vec::new();
        if !p.eat(&Tok::RBracket) {
            loop {
                match p.next() {
                    Tok::Num(s) => row.push(s),
                    _ => return Err(p.unexpected("a scalar")),
                }
                if p.eat(&Tok::RBracket) {
                    break;
                }
                p.expect(Tok::Comma)?;
            }
        }
        rows.push(row);
        if p.eat(&Tok::RBracket) {
            return Ok(rows);
        }
        p.expect(Tok::Comma)?;
    }
}

/// Parses `{ item, item, ... }` with a trailing comma allowed.
fn braced<T>(p: &mut Parser, mut item: impl FnMut(&mut Parser) -> Result<T>) -> Result<Vec<T>> {
    p.expect(Tok::LBrace)?;
    let mut out = Vec::new();
    loop {
        if p.eat(&Tok::RBrace) {
            return Ok(out);
        }
        out.push(item(p)?);
        if !p.eat(&Tok::Comma) {
            p.expect(Tok::RBrace)?;
            return Ok(out);
        }
    }
}

fn statement(code: &str, line: usize) -> Result<Option<Statement>> {
    if code.split_whitespace().next() == Some("check") {
        return check_statement(code, line).map(Some);
    }
    let toks = lex(code, line, 1)?;
    let mut p = Parser::new(toks);
    let keyword = match p.peek() {
        Tok::End => return Ok(None),
        Tok::Ident(k) => k.clone(),
        _ => return Err(p.unexpected("a statement keyword")),
    };
    let st = match keyword.as_str() {
        "field" => {
            let start = code.find("field").expect("keyword present") + "field".len();
            let text = code[start..].trim();
            let field = text.parse::<FieldSpec>().map_err(|e| Error::Parse {
                line,
                col: start + 2,
                msg: e.to_string(),
            })?;
            return Ok(Some(Statement::Field(field)));
        }
        "object" => {
            p.next();
            let name = p.name("an object name")?;
            let dims = braced(&mut p, |p| {
                let d = num::<i32>(p, "degree")?;
                p.expect(Tok::Colon)?;
                Ok((d, num::<usize>(p, "dimension")?))
            })?;
            Statement::Object { name, dims }
        }
        "gen" => {
            p.next();
            let name = p.name("a generator name")?;
            p.expect(Tok::Colon)?;
            let dom = p.objexpr()?;
            p.expect(Tok::Arrow)?;
            let cod = p.objexpr()?;
            p.expect(Tok::Eq)?;
            let blocks = braced(&mut p, |p| {
                if p.ident("`deg`")? != "deg" {
                    return Err(p.error("expected `deg`"));
                }
                let d = num::<i32>(p, "degree")?;
                p.expect(Tok::Colon)?;
                Ok((d, matrix_literal(p)?))
            })?;
            Statement::Gen {
                name,
                dom,
                cod,
                blocks,
            }
        }
        "let" => {
            p.next();
            let name = p.name("a name")?;
            p.expect(Tok::Eq)?;
            Statement::Let {
                name,
                term: p.term()?,
            }
        }
        "pair" => {
            p.next();
            let name = p.name("a pair name")?;
            let bindings = braced(&mut p, |p| {
                let role = p.ident("a role")?;
                if !ROLES.contains(&role.as_str()) {
                    return Err(p.error(format!("unknown role `{role}`")));
                }
                p.expect(Tok::Eq)?;
                Ok((role, p.name("a name")?))
            })?;
            Statement::Pair { name, bindings }
        }
        other => return Err(p.error(format!("unknown statement `{other}`"))),
    };
    p.end()?;
    Ok(Some(st))
}

fn check_statement(code: &str, line: usize) -> Result<Statement> {
    let start = code.find("check").expect("keyword present") + "check".len();
    let rest = &code[start..];
    let (label, body_offset) = match rest.find(':') {
        Some(i) => {
            let label = rest[..i].trim();
            let valid = !label.is_empty()
                && label
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_');
            if !valid {
                return Err(Error::Parse {
                    line,
                    col: start + 1,
                    msg: format!("invalid check label `{label}`"),
                });
            }
            (Some(label.to_string()), start + i + 1)
        }
        None => (None, start),
    };
    let mut p = Parser::new(lex(&code[body_offset..], line, body_offset + 1)?);
    let lhs = p.term()?;
    p.expect(Tok::EqEq)?;
    let rhs = p.term()?;
    p.end()?;
    Ok(Statement::Check { label, lhs, rhs })
}

/// Parses a script; errors carry line and column.
pub fn parse_script(text: &str) -> Result<Script> {
    let mut statements = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let code = raw.split('#').next().unwrap_or("");
        if let Some(st) = statement(code, i + 1)? {
            statements.push((i + 1, st));
        }
    }
    Ok(Script { statements })
}

/// Outcome of one `check` statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptCheck {
    pub label: String,
    pub line: usize,
    pub witness: Option<EntryDiff>,
}

impl ScriptCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct ScriptRun {
    pub env: Env,
    pub pairs: Vec<(String, FrobeniusPairData)>,
    pub checks: Vec<ScriptCheck>,
}

fn gen_mor(
    env: &Env,
    dom: &ObjExpr,
    cod: &ObjExpr,
    blocks: &[(i32, Vec<Vec<String>>)],
) -> Result<Mor> {
    let field = env.field();
    let (dom, cod) = (env.resolve(dom)?, env.resolve(cod)?);
    let mut out = BTreeMap::new();
    for (d, rows) in blocks {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| field.parse_scalar(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if out.contains_key(d) {
            return Err(Error::InvalidBlock {
                degree: *d,
                reason: "degree listed twice".into(),
            });
        }
        let m = if rows.is_empty() {
            Matrix::zeros(field, 0, 0)
        } else {
            Matrix::from_rows(field, rows)?
        };
        out.insert(*d, m);
    }
    Mor::new(dom, cod, out)
}

fn bind_pair(env: &Env, bindings: &[(String, String)]) -> Result<FrobeniusPairData> {
    let mut roles = BTreeMap::new();
    for (role, name) in bindings {
        if roles.insert(role.as_str(), name.as_str()).is_some() {
            return Err(Error::InvalidArgument(format!("role `{role}` bound twice")));
        }
    }
    let get = |role: &str| {
        roles
            .get(role)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("role `{role}` is not bound")))
    };
    let g = |m: StructureMap| -> Result<Mor> { Ok(env.gen(get(m.name())?)?.clone()) };
    let pair = FrobeniusPairData {
        x: env.object(get("X")?)?.clone(),
        y: env.object(get("Y")?)?.clone(),
        eta: g(StructureMap::Eta)?,
        mu: g(StructureMap::Mu)?,
        psi: g(StructureMap::Psi)?,
        eps: g(StructureMap::Eps)?,
        delta: g(StructureMap::Delta)?,
        phi: g(StructureMap::Phi)?,
    };
    pair.validate_shapes()?;
    Ok(pair)
}

fn execute(st: &Statement, line: usize, run: &mut ScriptRun) -> Result<()> {
    let env = &mut run.env;
    match st {
        Statement::Field(f) => {
            if *f != env.field() {
                return Err(Error::FieldMismatch(env.field(), *f));
            }
        }
        Statement::Object { name, dims } => {
            env.define_object(name, GradedObj::new(env.field(), dims.iter().copied()))?;
        }
        Statement::Gen {
            name,
            dom,
            cod,
            blocks,
        } => {
            let m = gen_mor(env, dom, cod, blocks)?;
            env.define_gen(name, m)?;
        }
        Statement::Let { name, term } => {
            let m = evaluate(term, env)?;
            env.define_gen(name, m)?;
        }
        Statement::Check { label, lhs, rhs } => {
            let lt = typecheck(lhs, env)?;
            let rt = typecheck(rhs, env)?;
            if lt != rt {
                return Err(Error::Type(format!(
                    "sides differ: `{lhs}` : {} -> {} vs `{rhs}` : {} -> {}",
                    lt.0, lt.1, rt.0, rt.1
                )));
            }
            let witness = evaluate(lhs, env)?.first_difference(&evaluate(rhs, env)?)?;
            run.checks.push(ScriptCheck {
                label: label.clone().unwrap_or_else(|| format!("line-{line}")),
                line,
                witness,
            });
        }
        Statement::Pair { name, bindings } => {
            if run.pairs.iter().any(|(n, _)| n == name) {
                return Err(Error::InvalidArgument(format!(
                    "pair `{name}` already defined"
                )));
            }
            let pair = bind_pair(env, bindings)?;
            run.pairs.push((name.clone(), pair));
        }
    }
    Ok(())
}

/// Executes a script. Without an environment the first statement must
/// declare the field.
pub fn run_script(script: &Script, env: Option<Env>) -> Result<ScriptRun> {
    let mut stmts = script.statements.iter();
    let env = match env {
        Some(env) => env,
        None => match stmts.next() {
            Some((_, Statement::Field(f))) => Env::new(*f),
            Some((line, _)) => {
                return Err(
                    Error::InvalidArgument("expected a field declaration first".into())
                        .at_line(*line),
                )
            }
            None => return Err(Error::InvalidArgument("empty script".into())),
        },
    };
    let mut run = ScriptRun {
        env,
        pairs: Vec::new(),
        checks: Vec::new(),
    };
    for (line, st) in stmts {
        execute(st, *line, &mut run).map_err(|e| e.at_line(*line))?;
    }
    Ok(run)
}

/// Every diagram of the pair definition, its right-hand mirror, the
/// commutativity and derived right-structure squares, the zigzags and the
/// four transport correspondences, as labelled `check` statements over
/// `X`, `Y`, `eta`, `mu`, `psi`, `eps`, `delta`, `phi`.
pub fn standard_diagrams() -> &'static str {
    include_str!("../../scripts/diagrams.fp")
}

/// Runs [`standard_diagrams`] against a pair.
pub fn check_pair_with_script(pair: &FrobeniusPairData) -> Result<Vec<ScriptCheck>> {
    let script = parse_script(standard_diagrams())?;
    Ok(run_script(&script, Some(Env::for_pair(pair)))?.checks)
}
