use serde_json::json;
use thiserror::Error;

pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Command failures, split by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input: files, schema, parameters, states.
    #[error("{0}")]
    Input(String, Option<String>),
    /// Numerical failure inside a computation.
    #[error("{0}")]
    Numerical(String),
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError::Input(message.into(), None)
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(..) => EXIT_VALIDATION,
            CliError::Numerical(_) => EXIT_NUMERICAL,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(..) => "validation",
            CliError::Numerical(_) => "numerical",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let field = match self {
            CliError::Input(_, f) => f.clone(),
            CliError::Numerical(_) => None,
        };
        json!({
            "error": {
                "kind": self.kind(),
                "exit_code": self.exit_code(),
                "message": self.to_string(),
                "field": field,
            }
        })
    }

    /// Prefixes the message with where the input came from.
    pub fn context(self, what: &str) -> Self {
        match self {
            CliError::Input(m, f) => CliError::Input(format!("{what}: {m}"), f),
            CliError::Numerical(m) => CliError::Numerical(format!("{what}: {m}")),
        }
    }
}

impl From<sepbell::Error> for CliError {
    fn from(e: sepbell::Error) -> Self {
        use sepbell::Error as E;
        match e {
            E::NoConvergence { .. } | E::BudgetExhausted { .. } => CliError::Numerical(e.to_string()),
            E::Schema { ref field, .. } => CliError::Input(e.to_string(), Some(field.clone())),
            E::ParameterOutOfRange { name, .. } => CliError::Input(e.to_string(), Some(name.to_string())),
            _ => CliError::Input(e.to_string(), None),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
