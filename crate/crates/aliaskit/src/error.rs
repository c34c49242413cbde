use std::io;
use std::path::PathBuf;

use aliaskit_core::conll::{ConllError, LocateError};
use aliaskit_core::graph::GraphError;
use aliaskit_core::registry::MetadataError;
use aliaskit_core::resolver::ResolveError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Conll { path: PathBuf, source: ConllError },
    #[error("no chapter files (chapter_NN.conll) in {}", .0.display())]
    NoChapters(PathBuf),
    #[error("{}: {source}", path.display())]
    Csv { path: PathBuf, source: csv::Error },
    #[error("{}: row {row}: {message}", path.display())]
    Row {
        path: PathBuf,
        row: u64,
        message: String,
    },
    #[error("{}: {message}", path.display())]
    Format { path: PathBuf, message: String },
    #[error("{}: {source}", path.display())]
    Metadata { path: PathBuf, source: MetadataError },
    #[error("invalid metadata: {0}")]
    MetadataValue(#[from] MetadataError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    Locate(#[from] LocateError),
    #[error("unknown fixture {name:?} (known: {})", known.join(", "))]
    UnknownFixture { name: String, known: Vec<&'static str> },
}
