//! JSON descriptors of the varieties the engine knows about.

use serde::{Deserialize, Serialize};

use crate::error::Error;

fn is_false(b: &bool) -> bool {
    !*b
}

/// A supplied Ulrich witness: its split-side Euler characteristic and rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub chi: u64,
    pub rank: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    SelfProduct,
    Distinct,
    WithLine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FlagKind {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    DelPezzo,
    MinimalRuled,
    Abelian,
    K3,
    Phantom,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub degree: u64,
    pub period: u64,
    pub index: u64,
}

// Descriptors serialize with an internal "kind" tag. Deserializing that form
// buffers the whole object and loses field paths, so parsing goes through an
// externally tagged twin generated from the same variant list.
macro_rules! descriptor_enum {
    ($(
        $variant:ident {
            $( $(#[$fm:meta])* $field:ident : $ty:ty ),* $(,)?
        }
    ),* $(,)?) => {
        #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
        #[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
        pub enum Descriptor {
            $( $variant { $( $(#[$fm])* $field: $ty ),* } ),*
        }

        #[derive(Deserialize)]
        #[serde(rename_all = "snake_case", deny_unknown_fields)]
        enum Tagged {
            $(
                $variant { $( $(#[$fm])* $field: $ty ),* }
            ),*
        }

        impl From<Tagged> for Descriptor {
            fn from(t: Tagged) -> Self {
                match t {
                    $( Tagged::$variant { $($field),* } => Descriptor::$variant { $($field),* } ),*
                }
            }
        }
    };
}

descriptor_enum! {
    BrauerSeveri {
        degree: u64,
        period: u64,
        index: u64,
        d: u64,
        #[serde(default, skip_serializing_if = "is_false")]
        biquaternion: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        split_uc: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<Witness>,
    },
    GeneralizedBs {
        degree: u64,
        period: u64,
        index: u64,
        m: u64,
        s: u64,
        e: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<Witness>,
    },
    TwistedFlag {
        #[serde(rename = "type")]
        flag_type: FlagKind,
        ind: u64,
        split_uc: u64,
        #[serde(default, skip_serializing_if = "is_false")]
        rdim_plus_one_equals_ind: bool,
    },
    Involution {
        dim: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ind: Option<u64>,
        real_field: bool,
        trivial_discriminant: bool,
        d: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        split_uc: Option<u64>,
    },
    Quadric {
        m: u64,
        d: u64,
    },
    Ribbon {
        d: i64,
    },
    ProductOfCurves {
        product: ProductKind,
    },
    Curve {
        genus: u64,
        has_point: bool,
    },
    Surface {
        class: SurfaceKind,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        algebra: Option<AlgebraSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        product: Option<ProductKind>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base_genus: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        picard_rank_one: Option<bool>,
    },
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.into(),
    }
}

/// Parse one descriptor, reporting the JSON path of any schema error.
pub fn parse_value(value: serde_json::Value) -> Result<Descriptor, Error> {
    let serde_json::Value::Object(mut fields) = value else {
        return Err(schema(".", "a descriptor must be a JSON object"));
    };
    let kind = match fields.remove("kind") {
        Some(serde_json::Value::String(k)) => k,
        Some(_) => return Err(schema("kind", "expected a string")),
        None => return Err(schema("kind", "missing field `kind`")),
    };
    let mut wrapped = serde_json::Map::new();
    wrapped.insert(kind.clone(), serde_json::Value::Object(fields));
    serde_path_to_error::deserialize::<_, Tagged>(serde_json::Value::Object(wrapped))
        .map(Descriptor::from)
        .map_err(|e| {
            let path = e.path().to_string();
            // drop the variant segment added by the external tag
            let path = match path.strip_prefix(&kind) {
                Some("") => String::from("."),
                Some(rest) => rest.trim_start_matches('.').to_string(),
                None if path == "." => String::from("kind"),
                None => path,
            };
            schema(path, e.into_inner().to_string())
        })
}

pub fn parse_descriptor(text: &str) -> Result<Descriptor, Error> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| schema(".", e.to_string()))?;
    parse_value(value)
}

/// Parse a file body holding either a single descriptor or an array.
pub fn parse_input(text: &str) -> Result<Vec<Result<Descriptor, Error>>, Error> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| schema(".", e.to_string()))?;
    Ok(match value {
        serde_json::Value::Array(items) => items
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                parse_value(v).map_err(|e| match e {
                    Error::Schema { path, message } => Error::Schema {
                        path: format!("[{i}].{path}"),
                        message,
                    },
                    other => other,
                })
            })
            .collect(),
        other => vec![parse_value(other)],
    })
}

pub fn to_json(d: &Descriptor) -> String {
    serde_json::to_string(d).expect("descriptors always serialize")
}
