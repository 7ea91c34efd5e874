use std::collections::BTreeMap;
use std::path::Path;

use super::Failure;

const KEYS: &[&str] = &["format", "max-n", "max-r", "claims", "check-terms"];

/// `key = value` lines; `#` starts a comment.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Config(BTreeMap<String, String>);

impl Config {
    pub fn parse(text: &str) -> Result<Self, Failure> {
        let mut map = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Failure::usage(format!("config line {}: expected key=value", lineno + 1)))?;
            let key = key.trim().replace('_', "-");
            if !KEYS.contains(&key.as_str()) {
                return Err(Failure::usage(format!("config line {}: unknown key `{key}`", lineno + 1)));
            }
            map.insert(key, value.trim().to_string());
        }
        Ok(Config(map))
    }

    pub fn load(path: &Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    pub fn number<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, Failure> {
        self.get(key)
            .map(|v| v.parse::<T>().map_err(|_| Failure::usage(format!("config `{key}`: `{v}` is not a number"))))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let c = Config::parse("# defaults\nmax_n = 40\nformat=structured  # json\n\n").unwrap();
        assert_eq!(c.number::<u64>("max-n").unwrap(), Some(40));
        assert_eq!(c.get("format"), Some("structured"));
        assert_eq!(c.get("claims"), None);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_lines() {
        assert_eq!(Config::parse("colour = red").unwrap_err().code, 2);
        assert_eq!(Config::parse("max-n").unwrap_err().code, 2);
        assert!(Config::parse("max-n = lots").unwrap().number::<u64>("max-n").is_err());
    }
}
