import argparse
import json
from pathlib import Path

import numpy as np
import pandas as pd

from src.cli.schemas import AmplitudesDocument, DocumentMetadata, MatrixDocument, dump_document
from src.cli.services import InstanceGenerator


def generate_accepted_instances(n_values: list[int], count: int, seed: int) -> dict[str, str]:
    """
    Seeded random stabiliser states and Clifford gates, one document per (kind, n, index).

    States are emitted as amplitudes and gates as matrices so that they exercise verification.
    """
    documents: dict[str, str] = {}
    for n in n_values:
        for index in range(count):
            instance_seed = seed + 1000 * n + index
            state = InstanceGenerator.random_document("state", n, instance_seed, emit="amplitudes")
            documents[f"state_n{n}_{index}.json"] = dump_document(state)
            gate = InstanceGenerator.random_document("gate", n, instance_seed, emit="matrix")
            documents[f"gate_n{n}_{index}.json"] = dump_document(gate)
    return documents


def generate_rejected_instances(n_values: list[int], count: int, seed: int) -> dict[str, str]:
    """
    Haar-random vectors and unitaries; with probability one neither is a stabiliser object.
    """
    from scipy.stats import unitary_group

    rng = np.random.default_rng(seed)
    documents: dict[str, str] = {}
    for n in n_values:
        dim = 2 ** n
        for index in range(count):
            metadata = DocumentMetadata(seed=seed, generator="haar random")
            vector = rng.normal(size=dim) + 1j * rng.normal(size=dim)
            vector /= np.linalg.norm(vector)
            state = AmplitudesDocument(n=n, metadata=metadata, payload=[(float(a.real), float(a.imag)) for a in vector])
            documents[f"haar_state_n{n}_{index}.json"] = dump_document(state)

            unitary = unitary_group.rvs(dim, random_state=rng)
            gate = MatrixDocument(n=n, metadata=metadata, payload=[[(float(a.real), float(a.imag)) for a in row] for row in unitary])
            documents[f"haar_gate_n{n}_{index}.json"] = dump_document(gate)
    return documents


def main():
    parser = argparse.ArgumentParser(description='Generate verification fixtures for stabtool')
    parser.add_argument('--output', type=str, required=True, help='Output directory')
    parser.add_argument('--max-n', type=int, default=4, help='Largest qubit count')
    parser.add_argument('--count', type=int, default=3, help='Instances per kind and qubit count')
    parser.add_argument('--rejections', action='store_true', help='Also generate Haar-random rejection cases')
    parser.add_argument('--seed', type=int, default=42, help='Random seed')

    args = parser.parse_args()

    output_path = Path(args.output)
    output_path.mkdir(parents=True, exist_ok=True)

    n_values = list(range(1, args.max_n + 1))
    documents = generate_accepted_instances(n_values, args.count, args.seed)
    if args.rejections:
        documents |= generate_rejected_instances(n_values, args.count, args.seed)

    for name, text in documents.items():
        (output_path / name).write_text(text)

    summary = pd.DataFrame([{"kind": json.loads(text)["kind"], "n": json.loads(text)["n"]} for text in documents.values()])
    print(f"Saved {len(documents)} documents to: {output_path}")
    print(summary.value_counts().sort_index())


if __name__ == '__main__':
    main()
