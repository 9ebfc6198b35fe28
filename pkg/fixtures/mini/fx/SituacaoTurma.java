package fx;

public enum SituacaoTurma {
    ATIVA,
    ENCERRADA
}
