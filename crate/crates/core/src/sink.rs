//! Streaming consumers for enumerated sets.
//!
//! Enumerators hand each set to a [`SetSink`] by shared reference. The
//! reference is valid only for the duration of the call; clone it to keep it.

use std::ops::ControlFlow;

use crate::set::VertexSet;

pub trait SetSink {
    /// Receives one set. Returning `Break` stops the enumeration at once.
    fn emit(&mut self, set: &VertexSet) -> ControlFlow<()>;
}

/// Adapts a closure into a sink.
pub fn from_fn<F>(f: F) -> FnSink<F>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    FnSink(f)
}

pub struct FnSink<F>(F);

impl<F> SetSink for FnSink<F>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    #[inline]
    fn emit(&mut self, set: &VertexSet) -> ControlFlow<()> {
        (self.0)(set)
    }
}

impl<S: SetSink + ?Sized> SetSink for &mut S {
    #[inline]
    fn emit(&mut self, set: &VertexSet) -> ControlFlow<()> {
        (**self).emit(set)
    }
}

/// Counts sets and discards them.
#[derive(Debug, Default)]
pub struct CountSink {
    pub count: u64,
}

impl SetSink for CountSink {
    #[inline]
    fn emit(&mut self, _: &VertexSet) -> ControlFlow<()> {
        self.count += 1;
        ControlFlow::Continue(())
    }
}

/// Keeps a copy of every set in emission order.
#[derive(Debug, Default)]
pub struct CollectSink {
    pub sets: Vec<VertexSet>,
}

impl SetSink for CollectSink {
    fn emit(&mut self, set: &VertexSet) -> ControlFlow<()> {
        self.sets.push(set.clone());
        ControlFlow::Continue(())
    }
}

/// Forwards to an inner sink, counting what got through and stopping after
/// `limit` sets.
pub struct Limited<S> {
    inner: S,
    limit: Option<u64>,
    emitted: u64,
}

impl<S: SetSink> Limited<S> {
    pub fn new(inner: S, limit: Option<u64>) -> Self {
        Limited {
            inner,
            limit,
            emitted: 0,
        }
    }

    /// True once no further set may be emitted.
    pub fn exhausted(&self) -> bool {
        self.limit.is_some_and(|k| self.emitted >= k)
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }
}

impl<S: SetSink> SetSink for Limited<S> {
    #[inline]
    fn emit(&mut self, set: &VertexSet) -> ControlFlow<()> {
        if self.exhausted() {
            return ControlFlow::Break(());
        }
        self.emitted += 1;
        self.inner.emit(set)?;
        if self.exhausted() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }
}
