//! Model files: a script with a field declaration, objects, generators and
//! pair bindings.

use std::path::Path;

use frobpair::dsl::{parse_script, run_script, ScriptRun};
use frobpair::instances::flatten_pair;
use frobpair::{Error, FieldSpec, FrobeniusPairData, GradedObj, Result, StructureMap};

pub type Model = ScriptRun;

pub fn parse_model(text: &str) -> Result<Model> {
    run_script(&parse_script(text)?, None)
}

pub fn load_model(path: &Path) -> Result<Model> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    parse_model(&text)
}

/// The pair named `name`, or the only pair of the model.
pub fn select_pair<'a>(
    model: &'a Model,
    name: Option<&str>,
) -> Result<&'a (String, FrobeniusPairData)> {
    match name {
        Some(n) => model
            .pairs
            .iter()
            .find(|(p, _)| p == n)
            .ok_or_else(|| Error::UnknownName(n.to_string())),
        None => match model.pairs.as_slice() {
            [one] => Ok(one),
            [] => Err(Error::InvalidArgument("model declares no pair".into())),
            _ => Err(Error::InvalidArgument(
                "model declares several pairs; choose one with --pair".into(),
            )),
        },
    }
}

fn object_text(o: &GradedObj) -> String {
    let parts: Vec<String> = o.dims().iter().map(|(d, n)| format!("{d}:{n}")).collect();
    if parts.is_empty() {
        "{ }".into()
    } else {
        format!("{{ {} }}", parts.join(", "))
    }
}

fn field_text(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rationals => "field Q".into(),
        FieldSpec::PrimeField(p) => format!("field F {p}"),
    }
}

/// Serializes a pair as a model file. Objects are flattened first so that
/// `X` and `Y` can be declared directly.
pub fn write_model(name: &str, pair: &FrobeniusPairData) -> Result<String> {
    let pair = flatten_pair(pair)?;
    let ident: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    let mut out = format!("# {name}\n{}\n", field_text(pair.field()));
    out.push_str(&format!("object X {}\n", object_text(&pair.x)));
    out.push_str(&format!("object Y {}\n", object_text(&pair.y)));
    let types = [
        (StructureMap::Eta, "I -> X"),
        (StructureMap::Mu, "X * X -> X"),
        (StructureMap::Psi, "X * Y -> Y"),
        (StructureMap::Eps, "Y -> I"),
        (StructureMap::Delta, "Y -> Y * Y"),
        (StructureMap::Phi, "X -> Y * X"),
    ];
    for (m, ty) in types {
        out.push_str(&format!("gen {m} : {ty} = {}\n", pair.map(m)));
    }
    out.push_str(&format!(
        "pair {ident} {{ X=X, Y=Y, eta=eta, mu=mu, psi=psi, eps=eps, delta=delta, phi=phi }}\n"
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use frobpair::instances::{catalog_instance, trivial_pair};

    #[test]
    fn write_then_load() {
        let q = FieldSpec::Rationals;
        for name in ["trivial", "sphere2", "torus2", "commpair-xy"] {
            let pair = catalog_instance(name, q).unwrap().pair;
            let text = write_model(name, &pair).unwrap();
            let model = parse_model(&text).unwrap();
            let (_, loaded) = select_pair(&model, None).unwrap();
            assert_eq!(loaded, &flatten_pair(&pair).unwrap(), "{name}");
        }
    }

    #[test]
    fn trivial_text() {
        let text = write_model("trivial", &trivial_pair(FieldSpec::prime(2).unwrap())).unwrap();
        assert!(
            text.starts_with("# trivial\nfield F 2\nobject X { 0:1 }\n"),
            "{text}"
        );
    }

    #[test]
    fn pair_selection() {
        let text = write_model("trivial", &trivial_pair(FieldSpec::Rationals)).unwrap();
        let model = parse_model(&text).unwrap();
        assert!(select_pair(&model, Some("trivial")).is_ok());
        assert!(matches!(
            select_pair(&model, Some("nope")),
            Err(Error::UnknownName(_))
        ));
    }
}
