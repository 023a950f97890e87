use std::path::{Path, PathBuf};

use pentagon::algebra::{Group, Magma};
use pentagon::format::{parse_table_file, TableFile};
use pentagon::pentagon::PairMap;

use crate::commands::CliError;

pub struct LoadedMap {
    pub map: PairMap,
    /// The `group:` reference, resolved against the map file's directory.
    pub group_ref: Option<PathBuf>,
}

pub enum LoadedTable {
    Group { label: String, group: Group },
    Magma { label: String, magma: Magma },
}

impl LoadedTable {
    pub fn label(&self) -> &str {
        match self {
            LoadedTable::Group { label, .. } | LoadedTable::Magma { label, .. } => label,
        }
    }

    pub fn magma(&self) -> &Magma {
        match self {
            LoadedTable::Group { group, .. } => group.magma(),
            LoadedTable::Magma { magma, .. } => magma,
        }
    }
}

fn label_for(name: Option<&str>, path: &Path) -> String {
    match name {
        Some(name) => name.to_string(),
        None => path.file_stem().map_or_else(
            || path.display().to_string(),
            |s| s.to_string_lossy().into_owned(),
        ),
    }
}

pub fn load_map(path: &Path) -> Result<LoadedMap, CliError> {
    match parse_table_file(path)? {
        TableFile::PairMap { group_ref, map, .. } => {
            let base = path.parent().unwrap_or(Path::new(""));
            Ok(LoadedMap {
                map,
                group_ref: group_ref.map(|g| base.join(g)),
            })
        }
        _ => Err(CliError::Usage(format!(
            "{} holds a table, expected `dot` and `star`",
            path.display()
        ))),
    }
}

pub fn load_table(path: &Path) -> Result<LoadedTable, CliError> {
    let file = parse_table_file(path)?;
    let label = label_for(file.name(), path);
    match file {
        TableFile::Group { group, .. } => Ok(LoadedTable::Group { label, group }),
        TableFile::Magma { magma, .. } => Ok(LoadedTable::Magma { label, magma }),
        TableFile::PairMap { .. } => Err(CliError::Usage(format!(
            "{} holds a pair map, expected a `table`",
            path.display()
        ))),
    }
}

pub fn load_group(path: &Path) -> Result<(String, Group), CliError> {
    match load_table(path)? {
        LoadedTable::Group { label, group } => Ok((label, group)),
        LoadedTable::Magma { .. } => Err(CliError::Algebra(format!(
            "{} is not a group table",
            path.display()
        ))),
    }
}

/// Parses an element list such as `"0 2 4"` or `"0,2,4"`.
pub fn parse_elements(flag: &str, text: &str) -> Result<Vec<usize>, CliError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("--{flag}: `{t}` is not an element")))
        })
        .collect()
}

pub fn require<'a, T>(flag: &str, value: &'a Option<T>) -> Result<&'a T, CliError> {
    value
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("--{flag} is required")))
}
