use crate::model::ParsedSentence;

use super::{lower_is, Rewrite, Site, Skip};

pub(super) fn match_null_relcl(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|r| {
            matches!(r.xpos.as_str(), "WP" | "WDT")
                && lower_is(r, &["who", "that", "which"])
                && r.deprel == "nsubj"
                && r.index > 1
                && r.head != 0
                && s.token(r.head).deprel == "relcl"
        })
        .map(|r| Site::single(r.index))
        .collect()
}

pub(super) fn rewrite_null_relcl(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let prev = s.token(site.first - 1);
    let rewrite = Rewrite::new(*site, vec![]);
    Ok(if prev.space_after {
        rewrite
    } else {
        rewrite.space_before(true)
    })
}
