//! Front end for `curvedist-core`: an interactive session that asks for a
//! ladder and then for commands, and a batch interface for scripts.

use std::sync::atomic::{AtomicBool, Ordering};

pub mod batch;
pub mod repl;

/// Set by the interrupt handler while a command is running.
pub static CANCEL: AtomicBool = AtomicBool::new(false);
/// True while a cancelable computation is in progress.
pub static BUSY: AtomicBool = AtomicBool::new(false);

/// Called from the interrupt handler. Returns false when nothing is running
/// and the process should exit instead.
pub fn interrupt() -> bool {
    if BUSY.load(Ordering::SeqCst) {
        CANCEL.store(true, Ordering::SeqCst);
        true
    } else {
        false
    }
}

pub(crate) struct Busy;

impl Busy {
    pub(crate) fn start() -> Busy {
        CANCEL.store(false, Ordering::SeqCst);
        BUSY.store(true, Ordering::SeqCst);
        Busy
    }
}

impl Drop for Busy {
    fn drop(&mut self) {
        BUSY.store(false, Ordering::SeqCst);
    }
}

/// 2 for errors that indicate a bug, 1 for everything else.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<curvedist_core::Error>() {
        Some(e) if e.is_internal() => 2,
        _ => 1,
    }
}
