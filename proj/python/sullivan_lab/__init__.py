"""Rational homotopy computations: cohomology, Massey products, formality, Gysin sequences."""

from ._core import Error, betti, check_corpus, corpus_document, corpus_ids, gysin, run, smith_factors

__all__ = ["Error", "betti", "check_corpus", "corpus_document", "corpus_ids", "gysin", "run", "smith_factors", "main"]


def main(argv=None):
    import sys

    code, out, err = run(list(sys.argv[1:] if argv is None else argv))
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
