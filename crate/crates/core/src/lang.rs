//! Language codes and the process-wide language registry.
//!
//! English and Tamil are registered at startup. Further languages can be
//! added with [`register`]; every [`LanguageCode`] handed out by this module
//! refers to a registered entry.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A registered language identifier such as `en` or `ta`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LanguageCode(&'static str);

impl LanguageCode {
    pub const EN: LanguageCode = LanguageCode("en");
    pub const TA: LanguageCode = LanguageCode("ta");

    /// Resolves a code (case-insensitive) against the registry.
    pub fn parse(code: &str) -> Option<LanguageCode> {
        let wanted = code.trim().to_ascii_lowercase();
        registry()
            .read()
            .expect("language registry poisoned")
            .iter()
            .find(|info| info.code.0 == wanted)
            .map(|info| info.code)
    }

    pub fn as_str(&self) -> &'static str {
        self.0
    }

    /// Human readable name from the registry.
    pub fn name(&self) -> &'static str {
        registry()
            .read()
            .expect("language registry poisoned")
            .iter()
            .find(|info| info.code == *self)
            .map(|info| info.name)
            .unwrap_or(self.0)
    }
}

impl fmt::Display for LanguageCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl fmt::Debug for LanguageCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.to_ascii_uppercase())
    }
}

impl Serialize for LanguageCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.0)
    }
}

impl<'de> Deserialize<'de> for LanguageCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        LanguageCode::parse(&raw)
            .ok_or_else(|| serde::de::Error::custom(format!("unregistered language `{raw}`")))
    }
}

/// Registry entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LanguageInfo {
    pub code: LanguageCode,
    pub name: &'static str,
}

fn registry() -> &'static RwLock<Vec<LanguageInfo>> {
    static REGISTRY: OnceLock<RwLock<Vec<LanguageInfo>>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        RwLock::new(vec![
            LanguageInfo { code: LanguageCode::EN, name: "English" },
            LanguageInfo { code: LanguageCode::TA, name: "Tamil" },
        ])
    })
}

/// Adds a language to the registry, returning its code. Registering an
/// existing code is a no-op that returns the existing entry.
pub fn register(code: &str, name: &str) -> LanguageCode {
    let wanted = code.trim().to_ascii_lowercase();
    let mut langs = registry().write().expect("language registry poisoned");
    if let Some(info) = langs.iter().find(|info| info.code.0 == wanted) {
        return info.code;
    }
    let code = LanguageCode(Box::leak(wanted.into_boxed_str()));
    let name: &'static str = Box::leak(name.to_owned().into_boxed_str());
    langs.push(LanguageInfo { code, name });
    code
}

/// All registered languages in registration order.
pub fn registered() -> Vec<LanguageInfo> {
    registry().read().expect("language registry poisoned").clone()
}
