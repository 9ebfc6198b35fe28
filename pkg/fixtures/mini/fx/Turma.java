package fx;

public class Turma {

    String codigo;
    int capacidade;
    int ocupacao;
    private SituacaoTurma situacao;

    public void addAluno(Aluno a) {
        ocupacao++;
    }

    public boolean validar(Aluno a) {
        if (situacao == SituacaoTurma.ENCERRADA) {
            return false;
        }
        String chave = a.getNome() + a.getCpf() + a.getEmail();
        return situacao == SituacaoTurma.ATIVA && a.getIdade() > 16 && chave.length() > 2;
    }
}
