//! Per-thread memo of named series, one entry per coefficient type.

use std::any::{Any, TypeId};
use std::cell::RefCell;
use std::collections::HashMap;

use crate::coeff::Coefficient;
use crate::seq::Seq;

type Registry = HashMap<(TypeId, &'static str), Box<dyn Any>>;

thread_local! {
    static NAMED: RefCell<Registry> = RefCell::new(HashMap::new());
}

/// Returns the cached series `key` for `C`, building it on first use.
///
/// `build` may itself look up other cached series.
pub(crate) fn cached<C: Coefficient>(key: &'static str, build: impl FnOnce() -> Seq<C>) -> Seq<C> {
    let id = (TypeId::of::<C>(), key);
    let hit = NAMED.with(|m| m.borrow().get(&id).and_then(|b| b.downcast_ref::<Seq<C>>()).cloned());
    if let Some(s) = hit {
        return s;
    }
    let s = build();
    NAMED.with(|m| {
        m.borrow_mut().entry(id).or_insert_with(|| Box::new(s.clone()));
    });
    s
}
