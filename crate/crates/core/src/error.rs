use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("chunk label is empty after normalization")]
    DegenerateLabel,
    #[error("label vectors are empty")]
    EmptyLabels,
    #[error("gold has {gold} labels but predicted has {predicted}")]
    LengthMismatch { gold: usize, predicted: usize },
    #[error("label {0} is not binary (expected 0 or 1)")]
    NonBinaryLabel(u8),
    #[error("triple [{0}] passed the glossary filter without a glossary match")]
    GlossaryGuarantee(String),
}
