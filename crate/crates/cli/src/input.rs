use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use hirschkit::braid::parse_braid;
use hirschkit::{BraidWord, HirschDescriptor};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::CliError;

/// A braid given inline or as a JSON file `{"strands": L, "letters": [...]}`.
#[derive(Args, Debug)]
pub struct BraidInput {
    /// Signed generator indices, e.g. "1 -2 1 -2".
    #[arg(long, allow_hyphen_values = true, requires = "strands", conflicts_with = "file")]
    pub braid: Option<String>,
    /// Number of strands for --braid / --other.
    #[arg(long)]
    pub strands: Option<usize>,
    /// JSON file holding the braid.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

/// Two braids: the first as in [`BraidInput`], the second via --other or
/// --other-file.
#[derive(Args, Debug)]
pub struct BraidPair {
    #[command(flatten)]
    pub first: BraidInput,
    /// Second braid's letters, read on --strands strands.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "other_file")]
    pub other: Option<String>,
    /// JSON file holding the second braid.
    #[arg(long)]
    pub other_file: Option<PathBuf>,
}

/// A Hirsch descriptor: a braid plus --k, or a JSON file `{"braid": ..., "k": K}`.
#[derive(Args, Debug)]
pub struct DescriptorInput {
    #[arg(long, allow_hyphen_values = true, requires_all = ["strands", "k"], conflicts_with = "descriptor")]
    pub braid: Option<String>,
    #[arg(long)]
    pub strands: Option<usize>,
    /// Twist parameter of the gluing map.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    /// JSON file holding the descriptor.
    #[arg(long)]
    pub descriptor: Option<PathBuf>,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid JSON in {}: {e}", path.display())))
}

// Files are read unvalidated so that domain violations (a letter out of
// range, a link closure) exit with the domain error, not a JSON error.
#[derive(Deserialize)]
struct RawBraid {
    strands: usize,
    letters: Vec<i64>,
}

#[derive(Deserialize)]
struct RawDescriptor {
    braid: RawBraid,
    k: i64,
}

impl RawBraid {
    fn validate(self) -> Result<BraidWord, CliError> {
        Ok(BraidWord::new(self.strands, self.letters)?)
    }
}

fn inline_or_file(
    text: Option<&str>,
    strands: Option<usize>,
    file: Option<&Path>,
    what: &str,
) -> Result<BraidWord, CliError> {
    match (text, file) {
        (Some(t), None) => {
            let l = strands.ok_or_else(|| CliError::Usage("--strands is required".into()))?;
            Ok(parse_braid(t, l)?)
        }
        (None, Some(f)) => read_json::<RawBraid>(f)?.validate(),
        _ => Err(CliError::Usage(format!("give {what} inline or as a file"))),
    }
}

impl BraidInput {
    pub fn read(&self) -> Result<BraidWord, CliError> {
        inline_or_file(self.braid.as_deref(), self.strands, self.file.as_deref(), "--braid")
    }
}

impl BraidPair {
    pub fn read(&self) -> Result<(BraidWord, BraidWord), CliError> {
        let a = self.first.read()?;
        let strands = self.first.strands.or(Some(a.strands()));
        let b = inline_or_file(self.other.as_deref(), strands, self.other_file.as_deref(), "--other")?;
        Ok((a, b))
    }
}

impl DescriptorInput {
    pub fn read(&self) -> Result<HirschDescriptor, CliError> {
        match (&self.braid, &self.descriptor) {
            (Some(t), None) => {
                let l = self.strands.ok_or_else(|| CliError::Usage("--strands is required".into()))?;
                let k = self.k.ok_or_else(|| CliError::Usage("--k is required".into()))?;
                Ok(HirschDescriptor::new(parse_braid(t, l)?, k)?)
            }
            (None, Some(f)) => {
                let raw: RawDescriptor = read_json(f)?;
                Ok(HirschDescriptor::new(raw.braid.validate()?, raw.k)?)
            }
            _ => Err(CliError::Usage("give --braid with --strands and --k, or --descriptor".into())),
        }
    }
}
