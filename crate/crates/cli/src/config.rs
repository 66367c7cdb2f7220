use hilbound_core::{Field, MonomialOrder};

/// Default modulus for fixtures when no field is requested.
pub const DEFAULT_FIELD: Field = Field::Prime(32003);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

/// Everything besides the input files that determines a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// Field for fixtures, and target field for input files when set.
    pub field: Option<Field>,
    pub order: MonomialOrder,
    pub seed: u64,
    /// Largest `m` for Hilbert values, and the search cap where one applies.
    pub max_degree: u32,
    pub trials: usize,
    /// Random draws per degree in sample-and-verify searches.
    pub attempts: usize,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field: None,
            order: MonomialOrder::GRevLex,
            seed: 0,
            max_degree: 10,
            trials: 4,
            attempts: hilbound_core::regseq::DEFAULT_ATTEMPTS,
            format: OutputFormat::Json,
        }
    }
}

impl RunConfig {
    pub fn fixture_field(&self) -> Field {
        self.field.unwrap_or(DEFAULT_FIELD)
    }
}

pub fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    match s.to_ascii_lowercase().as_str() {
        "grevlex" => Ok(MonomialOrder::GRevLex),
        "grlex" => Ok(MonomialOrder::GrLex),
        "lex" => Ok(MonomialOrder::Lex),
        other => Err(format!("unknown order `{other}` (grevlex, grlex, lex)")),
    }
}

pub fn order_name(order: MonomialOrder) -> String {
    match order {
        MonomialOrder::GRevLex => "grevlex".into(),
        MonomialOrder::GrLex => "grlex".into(),
        MonomialOrder::Lex => "lex".into(),
        MonomialOrder::Elimination(mask) => format!("elimination:{mask:#x}"),
    }
}
