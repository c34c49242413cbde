use core::fmt;
use core::str::FromStr;

/// The five entity types carried by the NER layer.
///
/// Variant order is alphabetical by tag so that `Ord` gives the
/// secondary sort key of the entity list (CHR < GRP < LOC < MSC < ORG).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntityType {
    Chr,
    Grp,
    Loc,
    Msc,
    Org,
}

impl EntityType {
    pub const ALL: [EntityType; 5] = [
        EntityType::Chr,
        EntityType::Grp,
        EntityType::Loc,
        EntityType::Msc,
        EntityType::Org,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EntityType::Chr => "CHR",
            EntityType::Grp => "GRP",
            EntityType::Loc => "LOC",
            EntityType::Msc => "MSC",
            EntityType::Org => "ORG",
        }
    }
}

impl fmt::Display for EntityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown entity type {0:?} (expected one of CHR, LOC, ORG, GRP, MSC)")]
pub struct UnknownEntityType(pub alloc::string::String);

impl FromStr for EntityType {
    type Err = UnknownEntityType;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "CHR" => Ok(EntityType::Chr),
            "GRP" => Ok(EntityType::Grp),
            "LOC" => Ok(EntityType::Loc),
            "MSC" => Ok(EntityType::Msc),
            "ORG" => Ok(EntityType::Org),
            other => Err(UnknownEntityType(other.into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_is_case_sensitive() {
        assert_eq!("CHR".parse::<EntityType>(), Ok(EntityType::Chr));
        assert!("chr".parse::<EntityType>().is_err());
        assert!("PER".parse::<EntityType>().is_err());
    }

    #[test]
    fn order_is_alphabetical() {
        let mut all = EntityType::ALL;
        all.sort_by_key(|t| t.as_str());
        assert_eq!(all, EntityType::ALL);
        for t in EntityType::ALL {
            assert_eq!(t.as_str().parse::<EntityType>(), Ok(t));
        }
    }
}
