use std::fs;
use std::path::Path;

use serde_json::Value;

use hopfres::{Qi, QiMatrix};

pub type InputResult<T> = Result<T, String>;

fn read_json(path: &Path) -> InputResult<Value> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: malformed JSON: {e}", path.display()))
}

fn scalar(v: &Value) -> InputResult<Qi> {
    match v {
        Value::String(s) => s.parse().map_err(|e: hopfres::Error| e.to_string()),
        Value::Number(n) => n.as_i64().map(Qi::from_int).ok_or_else(|| format!("non-integer number {n}; use a string such as \"1/2\"")),
        other => Err(format!("expected a scalar, found {other}")),
    }
}

/// Array of rows; entries are scalar strings (`"1/2"`, `"3+2i"`) or integers.
pub fn matrix_from_value(v: &Value) -> InputResult<QiMatrix> {
    let rows = v.as_array().ok_or("expected a matrix as an array of rows")?;
    let rows = rows
        .iter()
        .map(|r| r.as_array().ok_or_else(|| "matrix row is not an array".to_string())?.iter().map(scalar).collect())
        .collect::<InputResult<Vec<Vec<Qi>>>>()?;
    QiMatrix::from_rows(rows).map_err(|e| e.to_string())
}

pub fn read_matrix(path: &Path) -> InputResult<QiMatrix> {
    matrix_from_value(&read_json(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

/// A character file: a bare matrix, or an object holding the matrix under `key`
/// and optionally `"g": "+1" | "-1"`.
pub struct CharacterFile {
    pub matrix: QiMatrix,
    pub g: Option<Qi>,
}

pub fn read_character(path: &Path, key: &str) -> InputResult<CharacterFile> {
    let v = read_json(path)?;
    let err = |e: String| format!("{}: {e}", path.display());
    match &v {
        Value::Array(_) => Ok(CharacterFile { matrix: matrix_from_value(&v).map_err(err)?, g: None }),
        Value::Object(map) => {
            let m = map.get(key).ok_or_else(|| err(format!("missing key {key:?}")))?;
            let g = map.get("g").map(|g| scalar(g).map_err(err)).transpose()?;
            Ok(CharacterFile { matrix: matrix_from_value(m).map_err(err)?, g })
        }
        _ => Err(err("expected a matrix or an object".into())),
    }
}

pub fn sweep_files(dir: &Path) -> InputResult<Vec<std::path::PathBuf>> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn accepts_strings_and_integers() {
        let m = matrix_from_value(&json!([["1/2", 0], [0, "2"]])).unwrap();
        assert_eq!(m, QiMatrix::diag_frac(&[(1, 2), (2, 1)]));
        assert!(matrix_from_value(&json!([[1.5]])).is_err());
        assert!(matrix_from_value(&json!([[1, 2], [3]])).is_err());
        assert!(matrix_from_value(&json!({"a": 1})).is_err());
    }
}
