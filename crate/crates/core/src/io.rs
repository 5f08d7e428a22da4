//! JSON files for algebras, dialgebras, bimodules and linear maps.
//!
//! Scalars are written as strings (`"3"`, `"-1/2"`) and read from strings
//! or JSON integers. `mul[i][j][k]` is the `e_k` coefficient of `e_i e_j`;
//! `alpha` and `f` are matrices acting on column vectors.

use serde::{Deserialize, Serialize};

use crate::algebra::{BimoduleData, HomAlgebra, HomDialgebra, HomModule, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A scalar as it appears in a file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Int(i64),
    Text(String),
}

impl ScalarText {
    pub fn parse<S: Scalar>(&self) -> Result<S> {
        match self {
            ScalarText::Int(v) => Ok(S::from_i64(*v)),
            ScalarText::Text(t) => S::parse_scalar(t),
        }
    }

    pub fn emit<S: Scalar>(v: &S) -> Self {
        ScalarText::Text(v.to_string())
    }
}

pub type MatrixText = Vec<Vec<ScalarText>>;
pub type TableText = Vec<Vec<Vec<ScalarText>>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub dim: usize,
    pub alpha: MatrixText,
}

/// Every algebra-like file, distinguished by `kind`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub kind: String,
    pub dim: usize,
    pub alpha: MatrixText,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<TableText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lmul: Option<TableText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmul: Option<TableText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleFile>,
    #[serde(default, rename = "leftAct", skip_serializing_if = "Option::is_none")]
    pub left_act: Option<TableText>,
    #[serde(default, rename = "rightAct", skip_serializing_if = "Option::is_none")]
    pub right_act: Option<TableText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<MatrixText>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MapFile {
    pub matrix: MatrixText,
}

pub const KIND_ALGEBRA: &str = "hom-nonassociative";
pub const KIND_DIALGEBRA: &str = "hom-dialgebra";
pub const KIND_BIMODULE: &str = "bimodule";

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn parse_matrix<S: Scalar>(m: &MatrixText, rows: usize, cols: usize, what: &str) -> Result<Matrix<S>> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!("{what} must be {rows}x{cols}")));
    }
    let parsed = m
        .iter()
        .map(|r| r.iter().map(ScalarText::parse).collect::<Result<Vec<S>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows_with_cols(parsed, cols)
}

fn parse_table<S: Scalar>(t: &TableText, dims: (usize, usize, usize), what: &str) -> Result<StructureConstants<S>> {
    let (l, r, o) = dims;
    let shape_ok = t.len() == l && t.iter().all(|row| row.len() == r && row.iter().all(|v| v.len() == o));
    if !shape_ok {
        return Err(Error::DimensionMismatch(format!("{what} must have shape {l}x{r}x{o}")));
    }
    let nested = t
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.iter().map(ScalarText::parse).collect::<Result<Vec<S>>>())
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    StructureConstants::from_nested(l, r, o, nested)
}

fn emit_matrix<S: Scalar>(m: &Matrix<S>) -> MatrixText {
    m.to_rows().iter().map(|r| r.iter().map(ScalarText::emit).collect()).collect()
}

fn emit_table<S: Scalar>(t: &StructureConstants<S>) -> TableText {
    t.to_nested()
        .iter()
        .map(|row| row.iter().map(|v| v.iter().map(ScalarText::emit).collect()).collect())
        .collect()
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: format!("line {}: {e}", e.line()),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    fn hom_module<S: Scalar>(&self) -> Result<HomModule<S>> {
        HomModule::new(parse_matrix(&self.alpha, self.dim, self.dim, "alpha")?)
    }

    pub fn to_algebra<S: Scalar>(&self) -> Result<HomAlgebra<S>> {
        if self.kind != KIND_ALGEBRA && self.kind != KIND_BIMODULE {
            return Err(bad(format!("expected kind {KIND_ALGEBRA:?}, found {:?}", self.kind)));
        }
        let mul = self.mul.as_ref().ok_or_else(|| bad("missing \"mul\""))?;
        let d = self.dim;
        HomAlgebra::new(self.hom_module()?, parse_table(mul, (d, d, d), "mul")?)
    }

    pub fn to_dialgebra<S: Scalar>(&self) -> Result<HomDialgebra<S>> {
        if self.kind != KIND_DIALGEBRA {
            return Err(bad(format!("expected kind {KIND_DIALGEBRA:?}, found {:?}", self.kind)));
        }
        let d = self.dim;
        let lmul = self.lmul.as_ref().ok_or_else(|| bad("missing \"lmul\""))?;
        let rmul = self.rmul.as_ref().ok_or_else(|| bad("missing \"rmul\""))?;
        HomDialgebra::new(
            self.hom_module()?,
            parse_table(lmul, (d, d, d), "lmul")?,
            parse_table(rmul, (d, d, d), "rmul")?,
        )
    }

    pub fn to_bimodule<S: Scalar>(&self) -> Result<BimoduleData<S>> {
        let algebra = self.to_algebra()?;
        let m = self.module.as_ref().ok_or_else(|| bad("missing \"module\""))?;
        let module = HomModule::new(parse_matrix(&m.alpha, m.dim, m.dim, "module.alpha")?)?;
        let (da, dm) = (self.dim, m.dim);
        let left = self.left_act.as_ref().ok_or_else(|| bad("missing \"leftAct\""))?;
        let right = self.right_act.as_ref().ok_or_else(|| bad("missing \"rightAct\""))?;
        let f = self.f.as_ref().ok_or_else(|| bad("missing \"f\""))?;
        BimoduleData::new(
            algebra,
            module,
            parse_table(left, (da, dm, dm), "leftAct")?,
            parse_table(right, (dm, da, dm), "rightAct")?,
            parse_matrix(f, da, dm, "f")?,
        )
    }

    pub fn from_algebra<S: Scalar>(a: &HomAlgebra<S>) -> Self {
        AlgebraFile {
            kind: KIND_ALGEBRA.into(),
            dim: a.dim(),
            alpha: emit_matrix(a.module.alpha()),
            mul: Some(emit_table(&a.mul)),
            lmul: None,
            rmul: None,
            module: None,
            left_act: None,
            right_act: None,
            f: None,
        }
    }

    pub fn from_dialgebra<S: Scalar>(d: &HomDialgebra<S>) -> Self {
        AlgebraFile {
            kind: KIND_DIALGEBRA.into(),
            dim: d.dim(),
            alpha: emit_matrix(d.module.alpha()),
            mul: None,
            lmul: Some(emit_table(&d.lmul)),
            rmul: Some(emit_table(&d.rmul)),
            module: None,
            left_act: None,
            right_act: None,
            f: None,
        }
    }

    pub fn from_bimodule<S: Scalar>(b: &BimoduleData<S>) -> Self {
        AlgebraFile {
            kind: KIND_BIMODULE.into(),
            module: Some(ModuleFile {
                dim: b.module.dim(),
                alpha: emit_matrix(b.module.alpha()),
            }),
            left_act: Some(emit_table(&b.left_act)),
            right_act: Some(emit_table(&b.right_act)),
            f: Some(emit_matrix(&b.f)),
            ..Self::from_algebra(&b.algebra)
        }
    }
}

impl MapFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: format!("line {}: {e}", e.line()),
        })
    }

    pub fn to_matrix<S: Scalar>(&self, rows: usize, cols: usize) -> Result<Matrix<S>> {
        parse_matrix(&self.matrix, rows, cols, "matrix")
    }

    pub fn from_matrix<S: Scalar>(m: &Matrix<S>) -> Self {
        MapFile { matrix: emit_matrix(m) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn algebra_round_trip() {
        let text = r#"{"kind":"hom-nonassociative","dim":2,"alpha":[[1,0],[0,"1/2"]],
            "mul":[[[1,0],[0,1]],[[0,0],[0,0]]]}"#;
        let file = AlgebraFile::from_json(text).unwrap();
        let a: HomAlgebra<Q> = file.to_algebra().unwrap();
        assert_eq!(a.module.alpha()[(1, 1)], Q::new(1.into(), 2.into()));
        let again = AlgebraFile::from_json(&AlgebraFile::from_algebra(&a).to_json()).unwrap();
        assert_eq!(again.to_algebra::<Q>().unwrap(), a);
    }

    #[test]
    fn shape_and_kind_errors() {
        let wrong_shape = r#"{"kind":"hom-nonassociative","dim":2,"alpha":[[1,0],[0,1]],"mul":[[[1,0]]]}"#;
        assert!(matches!(
            AlgebraFile::from_json(wrong_shape).unwrap().to_algebra::<Q>(),
            Err(Error::DimensionMismatch(_))
        ));
        let di = r#"{"kind":"hom-dialgebra","dim":1,"alpha":[[1]],"lmul":[[[0]]],"rmul":[[[0]]]}"#;
        assert!(AlgebraFile::from_json(di).unwrap().to_algebra::<Q>().is_err());
        assert!(AlgebraFile::from_json(di).unwrap().to_dialgebra::<Q>().is_ok());
        assert!(matches!(AlgebraFile::from_json("{"), Err(Error::Parse { .. })));
        let bad_scalar = r#"{"kind":"hom-nonassociative","dim":1,"alpha":[["1/0"]],"mul":[[[0]]]}"#;
        assert!(AlgebraFile::from_json(bad_scalar).unwrap().to_algebra::<Q>().is_err());
    }

    #[test]
    fn bimodule_round_trip() {
        let a: HomAlgebra<Q> = AlgebraFile::from_json(r#"{"kind":"hom-nonassociative","dim":1,"alpha":[[1]],"mul":[[[1]]]}"#)
            .unwrap()
            .to_algebra()
            .unwrap();
        let b = BimoduleData::regular(&a);
        let file = AlgebraFile::from_bimodule(&b);
        let back: BimoduleData<Q> = AlgebraFile::from_json(&file.to_json()).unwrap().to_bimodule().unwrap();
        assert_eq!(back.f, b.f);
        assert_eq!(back.left_act, b.left_act);
    }
}
