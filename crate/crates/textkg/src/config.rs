//! Pipeline configuration: a TOML file, then command-line overrides.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use textkg_core::coref::DEFAULT_WINDOW;
use textkg_core::triples::DEFAULT_ADPOSITIONS;

use crate::error::{Error, Result};

/// Environment variable naming the default config file.
pub const CONFIG_ENV: &str = "TEXTKG_CONFIG";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum InputFormat {
    #[default]
    Text,
    Conllu,
}

impl InputFormat {
    /// `.conllu` files are CoNLL-U; anything else is text.
    pub fn detect(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("conllu") => InputFormat::Conllu,
            _ => InputFormat::Text,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DebugOutputs {
    #[serde(default)]
    pub coref: bool,
    #[serde(default)]
    pub chunks: bool,
    #[serde(default)]
    pub predicates: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    pub inputs: Vec<PathBuf>,
    /// `None` picks the format from each file's extension.
    pub input_format: Option<InputFormat>,
    pub glossary: PathBuf,
    pub output_dir: PathBuf,
    pub coref_window: usize,
    pub adpositions: Vec<String>,
    pub squash: bool,
    pub context: bool,
    pub debug: DebugOutputs,
}

impl PipelineConfig {
    pub fn new(inputs: Vec<PathBuf>, glossary: PathBuf, output_dir: PathBuf) -> Self {
        PipelineConfig {
            inputs,
            input_format: None,
            glossary,
            output_dir,
            coref_window: DEFAULT_WINDOW,
            adpositions: DEFAULT_ADPOSITIONS.iter().map(|s| s.to_string()).collect(),
            squash: false,
            context: false,
            debug: DebugOutputs::default(),
        }
    }

    pub fn format_of(&self, path: &Path) -> InputFormat {
        self.input_format.unwrap_or_else(|| InputFormat::detect(path))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorefSection {
    pub window: Option<usize>,
}

/// The on-disk config. Every key is optional; relative paths are resolved
/// against the file's directory.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub inputs: Option<Vec<PathBuf>>,
    pub input_format: Option<InputFormat>,
    pub glossary: Option<PathBuf>,
    pub output_dir: Option<PathBuf>,
    pub adpositions: Option<Vec<String>>,
    pub squash: Option<bool>,
    pub context: Option<bool>,
    #[serde(default)]
    pub coref: CorefSection,
    pub debug: Option<DebugOutputs>,
}

impl FileConfig {
    pub fn parse(src: &str, path: &Path) -> Result<Self> {
        let mut config: FileConfig =
            toml::from_str(src).map_err(|e| Error::Config { path: path.into(), message: e.to_string() })?;
        let base = path.parent().unwrap_or(Path::new(""));
        let resolve = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        config.inputs.iter_mut().flatten().for_each(resolve);
        config.glossary.iter_mut().for_each(resolve);
        config.output_dir.iter_mut().for_each(resolve);
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let src = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&src, path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_file() {
        let src = r#"
            inputs = ["chapter.txt"]
            input_format = "conllu"
            glossary = "/abs/glossary.txt"
            output_dir = "out"
            adpositions = ["in", "on"]
            squash = true
            context = false

            [coref]
            window = 3

            [debug]
            chunks = true
        "#;
        let c = FileConfig::parse(src, Path::new("/cfg/textkg.toml")).unwrap();
        assert_eq!(c.inputs, Some(vec![PathBuf::from("/cfg/chapter.txt")]));
        assert_eq!(c.input_format, Some(InputFormat::Conllu));
        assert_eq!(c.glossary, Some(PathBuf::from("/abs/glossary.txt")));
        assert_eq!(c.output_dir, Some(PathBuf::from("/cfg/out")));
        assert_eq!(c.coref.window, Some(3));
        assert_eq!(c.debug, Some(DebugOutputs { coref: false, chunks: true, predicates: false }));
    }

    #[test]
    fn empty_file() {
        assert_eq!(FileConfig::parse("", Path::new("x.toml")).unwrap(), FileConfig::default());
    }

    #[test]
    fn unknown_key_rejected() {
        assert!(matches!(FileConfig::parse("colour = 1", Path::new("x.toml")), Err(Error::Config { .. })));
    }

    #[test]
    fn format_detection() {
        assert_eq!(InputFormat::detect(Path::new("a.conllu")), InputFormat::Conllu);
        assert_eq!(InputFormat::detect(Path::new("a.txt")), InputFormat::Text);
    }
}
