//! The interactive session.
//!
//! ```text
//! Input top identifications: 1,6,11,4,3,2,7,0,5,9,8,7
//! Input bottom identifications: 0,5,10,3,2,1,6,11,4,10,9,8
//! What would you like to calculate? genus
//! Genus:  2
//! ```

use std::io::{self, BufRead, Write};

use curvedist_core::report::{run_with, Command};
use curvedist_core::{DistanceOptions, Error, Ladder};

use crate::{Busy, CANCEL};

pub const TOP_PROMPT: &str = "Input top identifications:";
pub const BOTTOM_PROMPT: &str = "Input bottom identifications:";
pub const COMMAND_PROMPT: &str = "What would you like to calculate?";
pub const SHEAR_PROMPT: &str = "Would you like to shear this multi-curve?";

pub const HELP: &str = "\
Commands:
  genus     genus of the surface filled by the pair
  distance  curve complex distance: 2, 3 or 4+
  curves    candidate curves and the genus each fills with alpha
  matrix    characteristic matrix of beta
  faces     face degrees and boundary labels
  perm      re-gluings that give a single curve, with distances
  new       enter another ladder
  help      show this text
  quit      leave";

pub struct Session<'a> {
    input: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    /// Write each answer after its prompt, for input that does not echo.
    pub echo: bool,
    pub ambient_genus: Option<usize>,
}

enum Next {
    Stay,
    NewLadder,
    Quit,
}

impl<'a> Session<'a> {
    pub fn new(input: &'a mut dyn BufRead, out: &'a mut dyn Write) -> Session<'a> {
        Session {
            input,
            out,
            echo: false,
            ambient_genus: None,
        }
    }

    fn ask(&mut self, prompt: &str) -> io::Result<Option<String>> {
        write!(self.out, "{prompt} ")?;
        self.out.flush()?;
        let mut line = String::new();
        if self.input.read_line(&mut line)? == 0 {
            writeln!(self.out)?;
            return Ok(None);
        }
        let answer = line.trim().to_string();
        if self.echo {
            writeln!(self.out, "{answer}")?;
        }
        Ok(Some(answer))
    }

    pub fn run(&mut self) -> io::Result<()> {
        'ladder: loop {
            let Some(top) = self.ask(TOP_PROMPT)? else {
                return Ok(());
            };
            if is_quit(&top) {
                return Ok(());
            }
            let Some(bottom) = self.ask(BOTTOM_PROMPT)? else {
                return Ok(());
            };
            let ladder = match Ladder::parse(&top, &bottom) {
                Ok(l) => l,
                Err(e) => {
                    writeln!(self.out, "error: {e}")?;
                    continue;
                }
            };
            if !ladder.is_single_curve() {
                let Some(answer) = self.ask(SHEAR_PROMPT)? else {
                    return Ok(());
                };
                if matches!(answer.to_ascii_lowercase().as_str(), "y" | "yes") {
                    self.execute(&ladder, Command::Perm)?;
                }
            }
            loop {
                let Some(line) = self.ask(COMMAND_PROMPT)? else {
                    return Ok(());
                };
                match self.dispatch(&ladder, &line)? {
                    Next::Stay => {}
                    Next::NewLadder => continue 'ladder,
                    Next::Quit => return Ok(()),
                }
            }
        }
    }

    fn dispatch(&mut self, ladder: &Ladder, line: &str) -> io::Result<Next> {
        let verb = line.trim().to_ascii_lowercase();
        match verb.as_str() {
            "" => {}
            "new" => return Ok(Next::NewLadder),
            "help" | "?" => writeln!(self.out, "{HELP}")?,
            v if is_quit(v) => return Ok(Next::Quit),
            v => match v.parse::<Command>() {
                Ok(command) => self.execute(ladder, command)?,
                Err(_) => writeln!(self.out, "Unknown command `{}`.\n{HELP}", line.trim())?,
            },
        }
        Ok(Next::Stay)
    }

    fn execute(&mut self, ladder: &Ladder, command: Command) -> io::Result<()> {
        let result = {
            let _busy = Busy::start();
            let options = DistanceOptions {
                ambient_genus: self.ambient_genus,
                cancel: Some(&CANCEL),
                ..Default::default()
            };
            run_with(ladder, command, &options)
        };
        match result {
            Ok(report) => writeln!(self.out, "{report}"),
            Err(Error::Cancelled) => writeln!(self.out, "Cancelled."),
            Err(e) => writeln!(self.out, "error: {e}"),
        }
    }
}

fn is_quit(s: &str) -> bool {
    matches!(s.trim().to_ascii_lowercase().as_str(), "quit" | "exit" | "q")
}
